#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "meshwork/json_io.hpp"
#include "meshwork/kernel.hpp"

namespace meshwork {

struct HarnessConfig {
  std::vector<Semigroup> roster;
  std::size_t exhaustive_all_max_n = 3;     // all-collections spaces
  std::size_t exhaustive_pair_max_n = 3;    // collection-pair spaces
  std::size_t exhaustive_triple_max_n = 2;  // collection-triple/quad spaces
  std::size_t exhaustive_stack_max_n = 3;   // stack spaces
  std::size_t exhaustive_filter_max_n = 4;  // filter spaces
  std::uint64_t sample_count = 300;         // sampled instances per law+semigroup
  std::uint64_t seed = 0;
  std::uint64_t fip_bound = 1'000'000;
  std::uint64_t subfamily_bound = 4096;
  std::size_t violation_cap = 5;

  static HarnessConfig with_default_roster();
};

struct LawReport {
  std::string law_id;
  std::uint64_t instances_checked = 0;
  std::map<std::string, std::uint64_t> skipped;  // reason -> count
  std::uint64_t violations_total = 0;
  std::vector<ordered_json> violations;  // first few, in generation order
  std::uint64_t seed = 0;
  double wall_ms = 0;

  bool pass() const { return violations_total == 0; }
  std::uint64_t skipped_total() const;
};

ordered_json report_to_json(const LawReport& r);
LawReport report_from_json(const ordered_json& j);

/// Accumulates one report while a law walks its instance space. Laws open
/// an instance, test named hypotheses (a weakened hypothesis is treated as
/// satisfied regardless of its value), and settle it with check or skip.
class LawRunner {
 public:
  LawRunner(const std::string& law_id,
            const std::vector<std::string>& hypothesis_names,
            const HarnessConfig& cfg, std::set<std::string> weakened);

  const HarnessConfig& config() const { return *cfg_; }

  /// describe is invoked synchronously (before the instance is closed) and
  /// only when a violation must be serialized; capturing by reference is
  /// safe.
  void begin_instance(std::function<ordered_json()> describe);
  bool hyp(const std::string& name, bool holds);
  void check(bool ok, const std::string& note = "");
  void skip(std::string reason);
  bool open() const { return open_; }

  /// Randomness for sampled instance #index, a pure function of
  /// (seed, law id, semigroup name, index).
  SplitMix64 instance_rng(const Semigroup& sg, std::uint64_t index) const;

  LawReport finish();

 private:
  const HarnessConfig* cfg_;
  std::set<std::string> weakened_;
  LawReport report_;
  bool open_ = false;
  std::function<ordered_json()> describe_;
};

struct Law {
  std::string id;
  std::string statement;
  std::vector<std::string> hypotheses;
  bool self_test = false;   // deliberately false, guards against vacuous passes
  bool exploratory = false; // open question probe: hunt target, not a theorem
  std::function<void(LawRunner&)> run;
};

const std::vector<Law>& law_registry();
const Law& find_law(const std::string& id);  // UnknownLawId

/// One report per requested law (all non-exploratory laws when the filter
/// is empty), deterministic for a fixed config up to wall_ms.
std::vector<LawReport> run_law_suite(const HarnessConfig& cfg,
                                     const std::vector<std::string>& law_filter = {});

/// Re-runs one law with the named hypotheses dropped. Violations found this
/// way are candidate counterexamples, not bugs.
LawReport hunt_counterexamples(const std::string& law_id,
                               const std::set<std::string>& weaken,
                               const HarnessConfig& cfg);

/// Suite verdict used for exit codes: true when every ordinary law passed
/// and every self-test law produced at least one violation.
bool suite_ok(const std::vector<LawReport>& reports);

}  // namespace meshwork

#include "meshwork/laws.hpp"

#include <algorithm>
#include <chrono>

namespace meshwork {

HarnessConfig HarnessConfig::with_default_roster() {
  HarnessConfig cfg;
  cfg.roster = standard_roster(4);
  return cfg;
}

std::uint64_t LawReport::skipped_total() const {
  std::uint64_t t = 0;
  for (const auto& [_, c] : skipped) t += c;
  return t;
}

ordered_json report_to_json(const LawReport& r) {
  ordered_json j;
  j["law"] = r.law_id;
  j["instances_checked"] = r.instances_checked;
  ordered_json sk = ordered_json::object();
  for (const auto& [reason, count] : r.skipped) sk[reason] = count;
  j["skipped"] = std::move(sk);
  j["violations_total"] = r.violations_total;
  j["violations"] = r.violations;
  j["seed"] = r.seed;
  j["wall_ms"] = r.wall_ms;
  return j;
}

LawReport report_from_json(const ordered_json& j) {
  LawReport r;
  r.law_id = j.at("law").get<std::string>();
  r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
  for (auto it = j.at("skipped").begin(); it != j.at("skipped").end(); ++it)
    r.skipped[it.key()] = it.value().get<std::uint64_t>();
  r.violations_total = j.at("violations_total").get<std::uint64_t>();
  for (const auto& v : j.at("violations")) r.violations.push_back(v);
  r.seed = j.at("seed").get<std::uint64_t>();
  r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

LawRunner::LawRunner(const std::string& law_id,
                     const std::vector<std::string>& hypothesis_names,
                     const HarnessConfig& cfg, std::set<std::string> weakened)
    : cfg_(&cfg), weakened_(std::move(weakened)) {
  for (const auto& w : weakened_)
    if (std::find(hypothesis_names.begin(), hypothesis_names.end(), w) ==
        hypothesis_names.end())
      throw UnknownHypothesis(law_id, w);
  report_.law_id = law_id;
  report_.seed = cfg.seed;
}

void LawRunner::begin_instance(std::function<ordered_json()> describe) {
  if (open_) throw CheckFailed("previous instance left unsettled: " +
                               report_.law_id);
  open_ = true;
  describe_ = std::move(describe);
}

bool LawRunner::hyp(const std::string& name, bool holds) {
  if (!open_) throw CheckFailed("hypothesis outside an instance");
  if (weakened_.count(name)) return true;
  if (holds) return true;
  skip("hypothesis: " + name);
  return false;
}

void LawRunner::check(bool ok, const std::string& note) {
  if (!open_) throw CheckFailed("check outside an instance");
  open_ = false;
  ++report_.instances_checked;
  if (!ok) {
    ++report_.violations_total;
    if (report_.violations.size() < cfg_->violation_cap) {
      ordered_json v = describe_ ? describe_() : ordered_json::object();
      if (!note.empty()) v["note"] = note;
      report_.violations.push_back(std::move(v));
    }
  }
  describe_ = nullptr;
}

void LawRunner::skip(std::string reason) {
  if (!open_) throw CheckFailed("skip outside an instance");
  open_ = false;
  ++report_.skipped[std::move(reason)];
  describe_ = nullptr;
}

namespace {
std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}
}  // namespace

SplitMix64 LawRunner::instance_rng(const Semigroup& sg,
                                   std::uint64_t index) const {
  std::uint64_t h = fnv1a(report_.law_id);
  h = fnv1a(sg.name(), h);
  h ^= cfg_->seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  return SplitMix64(h);
}

LawReport LawRunner::finish() {
  if (open_) throw CheckFailed("law finished inside an instance");
  return std::move(report_);
}

// assembled by the per-section registration units
void register_mesh_laws(std::vector<Law>&);
void register_derived_laws(std::vector<Law>&);
void register_relative_laws(std::vector<Law>&);
void register_kernel_laws(std::vector<Law>&);

const std::vector<Law>& law_registry() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> v;
    register_mesh_laws(v);
    register_derived_laws(v);
    register_relative_laws(v);
    register_kernel_laws(v);
    std::set<std::string> seen;
    for (const Law& l : v)
      if (!seen.insert(l.id).second)
        throw CheckFailed("duplicate law id: " + l.id);
    return v;
  }();
  return laws;
}

const Law& find_law(const std::string& id) {
  for (const Law& l : law_registry())
    if (l.id == id) return l;
  throw UnknownLawId(id);
}

namespace {

LawReport run_one(const Law& law, const HarnessConfig& cfg,
                  std::set<std::string> weakened) {
  LawRunner r(law.id, law.hypotheses, cfg, std::move(weakened));
  auto t0 = std::chrono::steady_clock::now();
  law.run(r);
  LawReport rep = r.finish();
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace

std::vector<LawReport> run_law_suite(const HarnessConfig& cfg,
                                     const std::vector<std::string>& law_filter) {
  std::vector<const Law*> todo;
  if (law_filter.empty()) {
    for (const Law& l : law_registry())
      if (!l.exploratory) todo.push_back(&l);
  } else {
    for (const std::string& id : law_filter) todo.push_back(&find_law(id));
  }
  std::vector<LawReport> out;
  out.reserve(todo.size());
  for (const Law* l : todo) out.push_back(run_one(*l, cfg, {}));
  return out;
}

LawReport hunt_counterexamples(const std::string& law_id,
                               const std::set<std::string>& weaken,
                               const HarnessConfig& cfg) {
  return run_one(find_law(law_id), cfg, weaken);
}

bool suite_ok(const std::vector<LawReport>& reports) {
  for (const LawReport& r : reports) {
    bool self_test = false;
    try {
      self_test = find_law(r.law_id).self_test;
    } catch (const UnknownLawId&) {
    }
    if (self_test ? r.pass() : !r.pass()) return false;
  }
  return true;
}

}  // namespace meshwork

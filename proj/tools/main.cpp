// Command line front end: load semigroups and collections, apply the
// operator algebra, run the law suite, hunt counterexamples under weakened
// hypotheses, and emit generated Cayley tables.
//
// Exit codes: 0 success, 1 law violation from `check`, 2 input/usage error.

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "meshwork/json_io.hpp"
#include "meshwork/laws.hpp"

using namespace meshwork;

namespace {

std::string normalize_name(std::string s) {
  for (char& c : s) {
    if (c == '-') c = '_';
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

std::vector<std::string> split_commas(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& a : args) {
    std::size_t start = 0;
    while (start <= a.size()) {
      std::size_t pos = a.find(',', start);
      if (pos == std::string::npos) {
        if (start < a.size()) out.push_back(a.substr(start));
        break;
      }
      if (pos > start) out.push_back(a.substr(start, pos - start));
      start = pos + 1;
    }
  }
  return out;
}

SemigroupKind parse_kind(const std::string& name) {
  std::string k = normalize_name(name);
  if (k == "cyclic" || k == "cyclic_group") return SemigroupKind::cyclic_group;
  if (k == "left_zero") return SemigroupKind::left_zero;
  if (k == "right_zero") return SemigroupKind::right_zero;
  if (k == "chain" || k == "semilattice" || k == "meet_semilattice_chain")
    return SemigroupKind::meet_semilattice_chain;
  if (k == "band" || k == "rectangular_band")
    return SemigroupKind::rectangular_band;
  if (k == "tfull" || k == "full_transformation")
    return SemigroupKind::full_transformation;
  throw ParseError(name, "unknown semigroup kind");
}

std::vector<Semigroup> small_six_roster() {
  return {standard_semigroup(SemigroupKind::cyclic_group, 2),
          standard_semigroup(SemigroupKind::cyclic_group, 3),
          standard_semigroup(SemigroupKind::left_zero, 2),
          standard_semigroup(SemigroupKind::right_zero, 2),
          standard_semigroup(SemigroupKind::meet_semilattice_chain, 2),
          standard_semigroup(SemigroupKind::meet_semilattice_chain, 3)};
}

std::vector<Semigroup> parse_roster(const std::string& spec) {
  if (spec == "default") return standard_roster(4);
  if (spec == "small") return small_six_roster();
  if (spec == "wide") return standard_roster(5);
  std::vector<Semigroup> out;
  for (const std::string& item : split_commas({spec})) {
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError(item, "expected kind:size");
    out.push_back(standard_semigroup(parse_kind(item.substr(0, colon)),
                                     std::stoul(item.substr(colon + 1))));
  }
  return out;
}

// Inline literals share the file grammar; anything starting with '[' or
// '{' is parsed in place, anything else is a path.
ordered_json literal_or_file(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{'))
    return parse_json(arg, "<inline>");
  return parse_json(read_file(arg), arg);
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ParseError(out_path, "cannot open for writing");
  f << text;
}

std::string render_text(const ordered_json& j, int indent = 0) {
  // human-readable projection; the JSON form is the contract
  std::string pad(indent, ' ');
  std::string out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += pad + it.key() + ":";
      if (it.value().is_object()) {
        out += "\n" + render_text(it.value(), indent + 2);
      } else {
        out += " " + it.value().dump() + "\n";
      }
    }
  } else {
    out += pad + j.dump() + "\n";
  }
  return out;
}

struct AnalyzeArgs {
  std::string semigroup_path;
  std::vector<std::string> collections;
  std::vector<std::string> filters;
  std::string set_literal;
  std::vector<std::string> ops;
  std::string format = "json";
  std::string out;
};

int run_analyze(const AnalyzeArgs& a) {
  Semigroup sg = semigroup_from_json(literal_or_file(a.semigroup_path),
                                     a.semigroup_path);
  std::vector<Collection> given;
  for (const std::string& c : a.collections)
    given.push_back(collection_from_json(sg, literal_or_file(c), c));
  for (const std::string& f : a.filters) {
    Collection base = collection_from_json(sg, literal_or_file(f), f);
    Collection closed = stack_closure(base);
    if (!closed.flags().filter) throw NotAFilter();
    given.push_back(std::move(closed));
  }
  auto first = [&]() -> const Collection& {
    if (given.empty()) throw ParseError("<args>", "operation needs a collection");
    return given[0];
  };
  Collection full = Collection::just_full(sg);
  auto second = [&]() -> const Collection& {
    return given.size() > 1 ? given[1] : full;
  };
  std::optional<Subset> set;
  if (!a.set_literal.empty())
    set = subset_from_json(sg, literal_or_file(a.set_literal), a.set_literal);

  ordered_json results;
  for (const std::string& raw : split_commas(a.ops)) {
    std::string op = normalize_name(raw);
    if (op == "flags") {
      results["flags"] = flags_to_json(classify_full(first()));
    } else if (op == "mesh") {
      results["mesh"] = collection_to_json(mesh(first()));
    } else if (op == "stack_closure") {
      results["stack_closure"] = collection_to_json(stack_closure(first()));
    } else if (op == "wedge") {
      results["wedge"] = collection_to_json(meet_wedge(first(), second()));
    } else if (op == "product") {
      results["product"] =
          collection_to_json(collection_product(first(), second()));
    } else if (op == "derived") {
      if (!set) throw ParseError("<args>", "derived needs --set");
      results["derived"] = subset_to_json(derived_set(*set, first()));
    } else if (op == "syn") {
      results["Syn(F,G)"] = collection_to_json(syn_collection(first(), second()));
    } else if (op == "thick") {
      results["Thick(F,G)"] =
          collection_to_json(thick_collection(first(), second()));
    } else if (op == "ps") {
      results["PS(F,G)"] = collection_to_json(ps_collection(first(), second()));
    } else if (op == "kernel") {
      KernelContext ctx = KernelContext::make(first(), second());
      results["K(F,G)"] = subset_to_json(ctx.relative_kernel());
    } else if (op == "kernel_idempotents") {
      KernelContext ctx = KernelContext::make(first(), second());
      results["E(K(F,G))"] = subset_to_json(kernel_idempotents(ctx));
    } else if (op == "central") {
      KernelContext ctx = KernelContext::make(first(), second());
      results["Cen(F,G)"] = collection_to_json(central_collection(ctx));
    } else if (op == "smallest_ideal") {
      results["K(S)"] = subset_to_json(smallest_ideal(Subset::full(sg)));
    } else if (op == "minimal_left_ideals") {
      ordered_json arr = ordered_json::array();
      for (const Subset& l : minimal_left_ideals(Subset::full(sg)))
        arr.push_back(subset_to_json(l));
      results["minimal_left_ideals"] = std::move(arr);
    } else if (op == "idempotents") {
      results["E(S)"] = subset_to_json(idempotents(Subset::full(sg)));
    } else if (op == "maximal_filters") {
      ordered_json arr = ordered_json::array();
      for (const Collection& h : maximal_filters_in(first()))
        arr.push_back(collection_to_json(h));
      results["maximal_filters"] = std::move(arr);
    } else if (op == "extremal") {
      ExtremalElements e = extremal_ultrafilters(first(), second());
      results["minimal"] = subset_to_json(e.minimal);
      results["maximal"] = subset_to_json(e.maximal);
    } else {
      throw ParseError(raw, "unknown operation");
    }
  }
  ordered_json doc;
  doc["semigroup"] = sg.name().empty() ? a.semigroup_path : sg.name();
  doc["results"] = std::move(results);
  write_output(a.out, a.format == "text" ? render_text(doc)
                                         : doc.dump(2) + "\n");
  return 0;
}

std::string reports_to_jsonl(const std::vector<LawReport>& reports) {
  std::string out;
  for (const LawReport& r : reports) out += report_to_json(r).dump() + "\n";
  return out;
}

void print_report_summary(const std::vector<LawReport>& reports) {
  for (const LawReport& r : reports) {
    bool self_test = false;
    try {
      self_test = find_law(r.law_id).self_test;
    } catch (const UnknownLawId&) {
    }
    bool ok = self_test ? !r.pass() : r.pass();
    std::cout << (ok ? "PASS" : "FAIL") << " " << r.law_id
              << " checked=" << r.instances_checked
              << " skipped=" << r.skipped_total()
              << " violations=" << r.violations_total;
    if (self_test) std::cout << " (self-test, violations expected)";
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for set-collection algebra on semigroups"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  CLI::App* analyze = app.add_subcommand("analyze", "apply operators to inputs");
  analyze->add_option("semigroup", an.semigroup_path, "Cayley table file or inline JSON")
      ->required();
  analyze
      ->add_option("--collection", an.collections,
                   "collection literal or file (used as given)")
      ->allow_extra_args(false);
  analyze
      ->add_option("--filter", an.filters,
                   "filter base literal or file (upward closed, then validated)")
      ->allow_extra_args(false);
  analyze->add_option("--set", an.set_literal, "subset literal for derived");
  analyze->add_option("--op", an.ops, "operations to apply")
      ->required()
      ->allow_extra_args(false);
  analyze->add_option("--format", an.format, "json|text");
  analyze->add_option("--out", an.out, "output path (default stdout)");

  std::string roster_spec = "default";
  std::size_t roster_size = 0;
  std::vector<std::string> law_filter;
  std::uint64_t seed = 0, sample = 0;
  std::size_t max_exhaustive = 0;
  std::string out_path, format = "text";

  CLI::App* check = app.add_subcommand("check", "run the law suite");
  check->add_option("--roster", roster_spec, "default|small|wide|kind:size,...");
  check->add_option("--size", roster_size, "roster of all standard semigroups up to this size");
  check->add_option("--law", law_filter, "restrict to these law ids")
      ->allow_extra_args(false);
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--sample", sample, "sampled instances per law and semigroup");
  check->add_option("--max-exhaustive", max_exhaustive,
                    "exhaustive cutoff for all-collections spaces");
  check->add_option("--out", out_path, "write JSON-lines report here");
  check->add_option("--format", format, "text|json (stdout content)");

  std::string hunt_law;
  std::vector<std::string> weaken_raw;
  CLI::App* hunt = app.add_subcommand("hunt", "search with weakened hypotheses");
  hunt->add_option("law", hunt_law, "law id")->required();
  hunt->add_option("--weaken", weaken_raw, "hypothesis names to drop")
      ->allow_extra_args(false);
  hunt->add_option("--roster", roster_spec, "default|small|wide|kind:size,...");
  hunt->add_option("--size", roster_size, "roster of all standard semigroups up to this size");
  hunt->add_option("--seed", seed, "sampling seed");
  hunt->add_option("--sample", sample, "sampled instances per semigroup");
  hunt->add_option("--out", out_path, "write JSON-lines report here");

  std::string gen_kind;
  std::size_t gen_n = 0;
  CLI::App* gen = app.add_subcommand("gen", "emit a standard Cayley table");
  gen->add_option("kind", gen_kind,
                  "cyclic|left_zero|right_zero|chain|band|full_transformation")
      ->required();
  gen->add_option("n", gen_n, "size parameter")->required();
  gen->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(an);

    if (*gen) {
      Semigroup sg = standard_semigroup(parse_kind(gen_kind), gen_n);
      write_output(out_path, semigroup_to_json(sg).dump(2) + "\n");
      return 0;
    }

    HarnessConfig cfg;
    cfg.roster = roster_size ? standard_roster(roster_size)
                             : parse_roster(roster_spec);
    cfg.seed = seed;
    if (sample) cfg.sample_count = sample;
    if (max_exhaustive) cfg.exhaustive_all_max_n = max_exhaustive;

    if (*check) {
      std::vector<LawReport> reports =
          run_law_suite(cfg, split_commas(law_filter));
      if (!out_path.empty()) write_output(out_path, reports_to_jsonl(reports));
      if (format == "json" && out_path.empty())
        std::cout << reports_to_jsonl(reports);
      else
        print_report_summary(reports);
      return suite_ok(reports) ? 0 : 1;
    }

    if (*hunt) {
      std::set<std::string> weaken;
      for (const std::string& w : split_commas(weaken_raw))
        weaken.insert(normalize_name(w));
      LawReport rep = hunt_counterexamples(hunt_law, weaken, cfg);
      std::string jsonl = report_to_json(rep).dump() + "\n";
      if (!out_path.empty()) write_output(out_path, jsonl);
      std::cout << "hunt " << rep.law_id << ": checked=" << rep.instances_checked
                << " skipped=" << rep.skipped_total()
                << " violations=" << rep.violations_total << "\n";
      if (rep.violations_total > 0 && out_path.empty())
        std::cout << jsonl;  // witnesses are the point of a hunt
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#pragma once

// Instance-space generators shared by the law registration units. Each
// generator walks one space per roster semigroup, opening one runner
// instance per element; the body settles it via hyp/check/skip. Spaces too
// big for their exhaustive cutoff are sampled with the runner's
// deterministic per-instance generator.

#include "meshwork/laws.hpp"

namespace meshwork::laws {

inline ordered_json base_desc(const Semigroup& sg) {
  ordered_json j;
  j["semigroup"] = semigroup_to_json(sg);
  return j;
}

// Aggregated skip reasons must be stable across instances, so witnesses
// and sizes are dropped here.
template <typename Body>
void guarded(LawRunner& r, Body&& body) {
  try {
    body();
  } catch (const SearchSpaceTooLarge& e) {
    if (r.open())
      r.skip("bound: search space over " + std::to_string(e.bound));
  } catch (const UniverseTooLarge&) {
    if (r.open()) r.skip("bound: universe size");
  } catch (const HypothesisViolated& e) {
    if (r.open()) r.skip("undefined: hypothesis " + e.hypothesis);
  } catch (const NotASubsemigroup&) {
    if (r.open()) r.skip("undefined: not a subsemigroup");
  } catch (const Error& e) {
    if (r.open()) r.skip(std::string("undefined: ") + e.what());
  }
}

// body(const Collection&)
template <typename Body>
void over_collections(LawRunner& r, const Semigroup& sg, Body body) {
  const auto& cfg = r.config();
  if (sg.size() <= cfg.exhaustive_all_max_n) {
    for (const Collection& c : all_collections(sg)) {
      r.begin_instance([&] {
        ordered_json j = base_desc(sg);
        j["C"] = collection_to_json(c);
        return j;
      });
      guarded(r, [&] { body(c); });
    }
  } else {
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      SplitMix64 rng = r.instance_rng(sg, i);
      Collection c = sample_collection(sg, rng);
      r.begin_instance([&] {
        ordered_json j = base_desc(sg);
        j["C"] = collection_to_json(c);
        return j;
      });
      guarded(r, [&] { body(c); });
    }
  }
}

// body(const Collection&, const Collection&)
template <typename Body>
void over_collection_pairs(LawRunner& r, const Semigroup& sg, Body body) {
  const auto& cfg = r.config();
  auto desc = [&sg](const Collection& a, const Collection& b) {
    return [&sg, &a, &b] {
      ordered_json j = base_desc(sg);
      j["C1"] = collection_to_json(a);
      j["C2"] = collection_to_json(b);
      return j;
    };
  };
  if (sg.size() <= cfg.exhaustive_pair_max_n) {
    std::vector<Collection> cs = all_collections(sg);
    for (const Collection& a : cs)
      for (const Collection& b : cs) {
        r.begin_instance(desc(a, b));
        guarded(r, [&] { body(a, b); });
      }
  } else {
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      SplitMix64 rng = r.instance_rng(sg, i);
      Collection a = sample_collection(sg, rng);
      Collection b = sample_collection(sg, rng);
      r.begin_instance(desc(a, b));
      guarded(r, [&] { body(a, b); });
    }
  }
}

// body(const Collection&, const Collection&, const Collection&)
template <typename Body>
void over_collection_triples(LawRunner& r, const Semigroup& sg, Body body) {
  const auto& cfg = r.config();
  auto desc = [&sg](const Collection& a, const Collection& b,
                    const Collection& c) {
    return [&sg, &a, &b, &c] {
      ordered_json j = base_desc(sg);
      j["C1"] = collection_to_json(a);
      j["C2"] = collection_to_json(b);
      j["C3"] = collection_to_json(c);
      return j;
    };
  };
  if (sg.size() <= cfg.exhaustive_triple_max_n) {
    std::vector<Collection> cs = all_collections(sg);
    for (const Collection& a : cs)
      for (const Collection& b : cs)
        for (const Collection& c : cs) {
          r.begin_instance(desc(a, b, c));
          guarded(r, [&] { body(a, b, c); });
        }
  } else {
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      SplitMix64 rng = r.instance_rng(sg, i);
      Collection a = sample_collection(sg, rng);
      Collection b = sample_collection(sg, rng);
      Collection c = sample_collection(sg, rng);
      r.begin_instance(desc(a, b, c));
      guarded(r, [&] { body(a, b, c); });
    }
  }
}

// body(c1, c2, c3, c4)
template <typename Body>
void over_collection_quads(LawRunner& r, const Semigroup& sg, Body body) {
  const auto& cfg = r.config();
  auto desc = [&sg](const Collection& a, const Collection& b,
                    const Collection& c, const Collection& d) {
    return [&sg, &a, &b, &c, &d] {
      ordered_json j = base_desc(sg);
      j["C1"] = collection_to_json(a);
      j["C2"] = collection_to_json(b);
      j["C3"] = collection_to_json(c);
      j["C4"] = collection_to_json(d);
      return j;
    };
  };
  if (sg.size() <= 1) {  // 4^(2^1) = 256, keep tiny universes exhaustive
    std::vector<Collection> cs = all_collections(sg);
    for (const Collection& a : cs)
      for (const Collection& b : cs)
        for (const Collection& c : cs)
          for (const Collection& d : cs) {
            r.begin_instance(desc(a, b, c, d));
            guarded(r, [&] { body(a, b, c, d); });
          }
  } else {
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      SplitMix64 rng = r.instance_rng(sg, i);
      Collection a = sample_collection(sg, rng);
      Collection b = sample_collection(sg, rng);
      Collection c = sample_collection(sg, rng);
      Collection d = sample_collection(sg, rng);
      r.begin_instance(desc(a, b, c, d));
      guarded(r, [&] { body(a, b, c, d); });
    }
  }
}

// All stacks (sampled ones are closures of random collections).
template <typename Body>
void over_stacks(LawRunner& r, const Semigroup& sg, Body body) {
  const auto& cfg = r.config();
  auto desc = [&sg](const Collection& a) {
    return [&sg, &a] {
      ordered_json j = base_desc(sg);
      j["C"] = collection_to_json(a);
      return j;
    };
  };
  if (sg.size() <= cfg.exhaustive_stack_max_n) {
    for (const Collection& c : all_stacks(sg)) {
      r.begin_instance(desc(c));
      guarded(r, [&] { body(c); });
    }
  } else {
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      SplitMix64 rng = r.instance_rng(sg, i);
      Collection c = stack_closure(sample_collection(sg, rng));
      r.begin_instance(desc(c));
      guarded(r, [&] { body(c); });
    }
  }
}

// All filters including the improper one (the full powerset); sampled
// draws pick a principal filter or occasionally the improper one.
inline std::vector<Collection> filter_space(const Semigroup& sg) {
  std::vector<Collection> out = all_proper_filters(sg);
  out.push_back(Collection::powerset(sg));
  return out;
}

inline Collection sample_filter(const Semigroup& sg, SplitMix64& rng) {
  std::uint64_t v = rng.below(std::uint64_t{1} << sg.size());
  if (v == 0) return Collection::powerset(sg);
  Subset b(sg);
  for (std::size_t i = 0; i < sg.size(); ++i)
    if ((v >> i) & 1) b.set(i);
  return Collection::principal_filter(sg, b);
}

// body(const Collection& F)
template <typename Body>
void over_filters(LawRunner& r, const Semigroup& sg, Body body) {
  const auto& cfg = r.config();
  auto desc = [&sg](const Collection& a) {
    return [&sg, &a] {
      ordered_json j = base_desc(sg);
      j["F"] = collection_to_json(a);
      return j;
    };
  };
  if (sg.size() <= cfg.exhaustive_filter_max_n) {
    for (const Collection& c : filter_space(sg)) {
      r.begin_instance(desc(c));
      guarded(r, [&] { body(c); });
    }
  } else {
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      SplitMix64 rng = r.instance_rng(sg, i);
      Collection c = sample_filter(sg, rng);
      r.begin_instance(desc(c));
      guarded(r, [&] { body(c); });
    }
  }
}

// body(const Collection& F, const Collection& G)
template <typename Body>
void over_filter_pairs(LawRunner& r, const Semigroup& sg, Body body) {
  const auto& cfg = r.config();
  auto desc = [&sg](const Collection& a, const Collection& b) {
    return [&sg, &a, &b] {
      ordered_json j = base_desc(sg);
      j["F"] = collection_to_json(a);
      j["G"] = collection_to_json(b);
      return j;
    };
  };
  if (sg.size() <= cfg.exhaustive_filter_max_n) {
    std::vector<Collection> cs = filter_space(sg);
    for (const Collection& a : cs)
      for (const Collection& b : cs) {
        r.begin_instance(desc(a, b));
        guarded(r, [&] { body(a, b); });
      }
  } else {
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      SplitMix64 rng = r.instance_rng(sg, i);
      Collection a = sample_filter(sg, rng);
      Collection b = sample_filter(sg, rng);
      r.begin_instance(desc(a, b));
      guarded(r, [&] { body(a, b); });
    }
  }
}

template <typename Fn>
void over_roster(LawRunner& r, Fn&& fn) {
  for (const Semigroup& sg : r.config().roster) fn(sg);
}

// all subsets of sg, ascending bit-vector value
inline std::vector<Subset> all_subsets(const Semigroup& sg) {
  std::vector<Subset> out;
  Subset a(sg);
  out.push_back(a);
  while (a.increment()) out.push_back(a);
  return out;
}

inline bool is_proper(const Collection& c) {
  return !c.empty() && !c.contains_empty_set();
}

inline Law make_law(std::string id, std::string statement,
                    std::vector<std::string> hypotheses,
                    std::function<void(LawRunner&)> run, bool self_test = false,
                    bool exploratory = false) {
  Law l;
  l.id = std::move(id);
  l.statement = std::move(statement);
  l.hypotheses = std::move(hypotheses);
  l.self_test = self_test;
  l.exploratory = exploratory;
  l.run = std::move(run);
  return l;
}

}  // namespace meshwork::laws

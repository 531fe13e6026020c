#include "latfan/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "latfan/families.hpp"
#include "latfan/isomorphism.hpp"

namespace latfan {

const char* const kAnchorNote =
    "The search fixes the special facet F = conv{e_1,...,e_d} with the standard "
    "basis as its vertex set. This loses no generality: a terminal simplicial "
    "reflexive d-polytope with 3d-1 vertices always has a special facet whose "
    "vertices form a lattice basis. With d vertices at level 0 the level-0 "
    "vertices are forced into the form -y+z_y over facet vertices y, which makes "
    "V(F) a basis (columns 1 and 2); when the vertex sum is zero every facet is "
    "special and volume descent across neighboring facets produces a basis facet "
    "(column 3). Mapping that basis to the standard one lands the polytope in "
    "the anchored search space, so the union of the three case branches is "
    "complete.";

namespace {

struct CaseColumn {
  CaseTag tag;
  int n0, n1, n2;  // vertex counts at levels 0, -1, -2
};

std::vector<CaseColumn> case_table(int d) {
  return {{CaseTag::Case1, d, d - 1, 0},
          {CaseTag::Case2, d, d - 2, 1},
          {CaseTag::Case3, d - 1, d, 0}};
}

std::vector<long long> key_of(const IntVector& v) {
  std::vector<long long> k;
  k.reserve(v.size());
  for (Int x : v) k.push_back(x.value());
  return k;
}

// Sums of candidate pairs, keyed for exact-target lookup during subset
// generation. Pair lists are in ascending (i, j) order.
class PairSumIndex {
 public:
  void build(const std::vector<IntVector>& cands) {
    for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(cands.size()); ++j) {
        by_sum_[key_of(add(cands[i], cands[j]))].push_back({i, j});
      }
    }
  }
  const std::vector<std::pair<int, int>>* find(const IntVector& target) const {
    auto it = by_sum_.find(key_of(target));
    return it == by_sum_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::vector<long long>, std::vector<std::pair<int, int>>> by_sum_;
};

// Enumerates k-element index subsets of cands (indices ascending, from
// min_idx) whose vectors sum to target, honoring the admit mask. Candidate
// coordinates all lie in [lo, hi], which bounds what a prefix can still reach.
void subsets_with_sum(const std::vector<IntVector>& cands, const PairSumIndex& pairs,
                      const std::vector<char>& admit, int k, const IntVector& target,
                      int min_idx, long long lo, long long hi, std::vector<int>& picks,
                      const std::function<void(const std::vector<int>&)>& fn) {
  for (Int c : target) {
    if (c.value() < lo * k || c.value() > hi * k) return;
  }
  if (k == 0) {
    if (is_zero_vector(target)) fn(picks);
    return;
  }
  if (k == 1) {
    auto it = std::lower_bound(cands.begin(), cands.end(), target);
    if (it != cands.end() && *it == target) {
      int idx = static_cast<int>(it - cands.begin());
      if (idx >= min_idx && admit[idx]) {
        picks.push_back(idx);
        fn(picks);
        picks.pop_back();
      }
    }
    return;
  }
  if (k == 2) {
    const auto* hits = pairs.find(target);
    if (!hits) return;
    for (const auto& [i, j] : *hits) {
      if (i < min_idx || !admit[i] || !admit[j]) continue;
      picks.push_back(i);
      picks.push_back(j);
      fn(picks);
      picks.pop_back();
      picks.pop_back();
    }
    return;
  }
  for (int i = min_idx; i < static_cast<int>(cands.size()); ++i) {
    if (!admit[i]) continue;
    picks.push_back(i);
    subsets_with_sum(cands, pairs, admit, k - 1, sub(target, cands[i]), i + 1, lo, hi, picks, fn);
    picks.pop_back();
  }
}

// Level-0 subsets. With pruning, two facts about the target class cut the
// tree: at most one chosen vector may be negative in any fixed coordinate
// (each would have to be the same neighboring vertex), and when all d
// level-0 slots are used every vector must be e_j - e_i with each source i
// used exactly once (the -y+z_y structure forced by terminality).
void gen_level0_subsets(int d, const CaseColumn& col, const std::vector<IntVector>& cands,
                        bool prune, std::vector<std::vector<int>>& out) {
  const bool pair_form = prune && col.n0 == d;
  const bool single_neg = prune;

  // Source coordinate (position of the -1) for candidates of the form
  // e_j - e_i, else -1.
  std::vector<int> pair_source(cands.size(), -1);
  for (size_t i = 0; i < cands.size(); ++i) {
    int minus = -1, plus = -1;
    bool ok = true;
    for (int k = 0; k < d && ok; ++k) {
      if (cands[i][k] == Int(0)) continue;
      if (cands[i][k] == Int(-1) && minus < 0) {
        minus = k;
      } else if (cands[i][k] == Int(1) && plus < 0) {
        plus = k;
      } else {
        ok = false;
      }
    }
    if (ok && minus >= 0 && plus >= 0) pair_source[i] = minus;
  }

  std::vector<int> chosen;
  std::vector<int> neg_used(d, 0);
  std::vector<char> source_used(d, 0);

  auto dfs = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == col.n0) {
      out.push_back(chosen);
      return;
    }
    int need = col.n0 - static_cast<int>(chosen.size());
    for (int i = start; i + need <= static_cast<int>(cands.size()); ++i) {
      if (pair_form && (pair_source[i] < 0 || source_used[pair_source[i]])) continue;
      if (single_neg) {
        bool clash = false;
        for (int k = 0; k < d && !clash; ++k) {
          if (cands[i][k] < Int(0) && neg_used[k]) clash = true;
        }
        if (clash) continue;
      }
      chosen.push_back(i);
      if (pair_form) source_used[pair_source[i]] = 1;
      for (int k = 0; k < d; ++k) {
        if (cands[i][k] < Int(0)) ++neg_used[k];
      }
      self(self, i + 1);
      for (int k = 0; k < d; ++k) {
        if (cands[i][k] < Int(0)) --neg_used[k];
      }
      if (pair_form) source_used[pair_source[i]] = 0;
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
}

struct CaseContext {
  CaseColumn column;
  std::vector<IntVector> basis;
  std::vector<IntVector> nu_targets;  // admissible vertex sums for this column
  const std::vector<IntVector>* cands0 = nullptr;
  const std::vector<IntVector>* cands1 = nullptr;
  const std::vector<IntVector>* cands2 = nullptr;
  const PairSumIndex* pairs1 = nullptr;
  std::vector<std::vector<int>> s0_list;
  long long lo1 = 0, hi1 = 0;  // coordinate range of level -1 candidates
  bool prune = true;
  int dim = 0;
  int target_vertices = 0;
};

struct BranchResult {
  CaseStats stats;
  std::vector<Polytope> survivors;
};

// Full check of one complete selection. Cheap necessary conditions
// (restatements of the acceptance predicates, valid in both pruning modes)
// run first; a finalist is then rebuilt from scratch and passes the whole
// predicate stack without any search-side assumption.
void try_accept(const CaseContext& ctx, const std::vector<IntVector>& pts, BranchResult& out) {
  ++out.stats.candidates;
  const int d = ctx.dim;

  // Terminality on midpoints: (y+z)/2 of two selected points lies in the
  // hull, so when it is a lattice point it must be the origin or selected.
  {
    std::set<std::vector<long long>> keys;
    for (const auto& p : pts) keys.insert(key_of(p));
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = i + 1; j < pts.size(); ++j) {
        bool even = true;
        for (int k = 0; k < d && even; ++k) {
          if ((pts[i][k].value() + pts[j][k].value()) % 2 != 0) even = false;
        }
        if (!even) continue;
        std::vector<long long> mid(d);
        bool zero = true;
        for (int k = 0; k < d; ++k) {
          mid[k] = (pts[i][k].value() + pts[j][k].value()) / 2;
          if (mid[k] != 0) zero = false;
        }
        if (!zero && !keys.count(mid)) return;
      }
    }
  }

  std::vector<RawFacet> raw = wrap_facets(d, pts);
  IntVector ones(d, Int(1));
  int raw_anchor = -1;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].offset != Int(1)) return;  // not reflexive
    if (raw[i].normal == ones) raw_anchor = static_cast<int>(i);
  }
  if (raw_anchor < 0) return;  // the anchored facet is not a facet

  // Every selected point must be extreme: incident facet normals of rank d.
  {
    std::vector<std::vector<IntVector>> incident(pts.size());
    for (const auto& f : raw) {
      for (int i : f.incident) incident[i].push_back(f.normal);
    }
    for (const auto& normals : incident) {
      if (static_cast<int>(normals.size()) < d || rank(IntMatrix(normals)) != d) return;
    }
  }
  for (const auto& f : raw) {
    if (static_cast<int>(f.incident.size()) != d) return;  // not simplicial
  }

  // From-scratch rebuild and full predicate stack for the finalist.
  Polytope p = Polytope::make(d, pts);
  if (p.vertex_count() != ctx.target_vertices) return;
  int anchor = p.find_facet(ones, Int(1));
  if (anchor < 0) return;
  if (!is_reflexive(p) || !is_simplicial(p)) return;
  if (!is_special_facet(p, anchor)) return;
  if (!is_terminal(p)) return;

  // The anchored facet's level histogram reproduces the column by
  // construction once every candidate is a vertex.
  LevelDistribution dist = levels(p, anchor);
  std::map<long long, int, std::greater<long long>> expected;
  expected[1] = ctx.dim;
  if (ctx.column.n0) expected[0] = ctx.column.n0;
  if (ctx.column.n1) expected[-1] = ctx.column.n1;
  if (ctx.column.n2) expected[-2] = ctx.column.n2;
  if (dist.counts != expected) {
    throw ContradictionError("enumerate: accepted selection has the wrong level histogram");
  }
  ++out.stats.survivors;
  out.survivors.push_back(std::move(p));
}

void process_s0(const CaseContext& ctx, const std::vector<int>& s0, BranchResult& out) {
  const int d = ctx.dim;
  const std::vector<IntVector>& cands0 = *ctx.cands0;
  const std::vector<IntVector>& cands1 = *ctx.cands1;

  IntVector s0_sum(d, Int(0));
  for (int i : s0) s0_sum = add(s0_sum, cands0[i]);

  // Admission mask over level -1 candidates for this level-0 choice.
  std::vector<char> admit(cands1.size(), 1);
  if (ctx.prune) {
    if (ctx.column.n0 == d) {
      // With d vertices at level 0, every level -1 vertex is the negative of
      // a basis vertex.
      for (size_t i = 0; i < cands1.size(); ++i) {
        int negs = 0, units = 0;
        for (int k = 0; k < d; ++k) {
          if (cands1[i][k] == Int(-1)) ++units;
          if (cands1[i][k] != Int(0)) ++negs;
        }
        admit[i] = (negs == 1 && units == 1);
      }
    } else {
      // Exclusion rule: distinct level-0 vertices with coefficient -1 on
      // coordinates i and j forbid a level -1 vertex with -1 on both.
      std::vector<int> owner(d, -1);
      for (int idx : s0) {
        for (int k = 0; k < d; ++k) {
          if (cands0[idx][k] == Int(-1)) owner[k] = idx;
        }
      }
      for (size_t c = 0; c < cands1.size(); ++c) {
        std::vector<int> neg_coords;
        for (int k = 0; k < d; ++k) {
          if (cands1[c][k] == Int(-1)) neg_coords.push_back(k);
        }
        bool bad = false;
        for (size_t a = 0; a < neg_coords.size() && !bad; ++a) {
          for (size_t b = a + 1; b < neg_coords.size() && !bad; ++b) {
            int oa = owner[neg_coords[a]], ob = owner[neg_coords[b]];
            if (oa >= 0 && ob >= 0 && oa != ob) bad = true;
          }
        }
        if (bad) admit[c] = 0;
      }
    }
  }

  IntVector ones(d, Int(1));
  for (const IntVector& nu : ctx.nu_targets) {
    auto run_with_s2 = [&](const IntVector* s2_vec) {
      IntVector target = sub(sub(nu, ones), s0_sum);
      if (s2_vec) target = sub(target, *s2_vec);
      std::vector<int> picks;
      subsets_with_sum(
          cands1, *ctx.pairs1, admit, ctx.column.n1, target, 0, ctx.lo1, ctx.hi1, picks,
          [&](const std::vector<int>& s1) {
            std::vector<IntVector> pts = ctx.basis;
            for (int i : s0) pts.push_back(cands0[i]);
            for (int i : s1) pts.push_back(cands1[i]);
            if (s2_vec) pts.push_back(*s2_vec);
            try_accept(ctx, pts, out);
          });
    };
    if (ctx.column.n2 == 0) {
      run_with_s2(nullptr);
    } else {
      for (const IntVector& v : *ctx.cands2) run_with_s2(&v);
    }
  }
}

}  // namespace

std::vector<IntVector> candidate_vertices(int dim, int level) {
  if (level > 0 || level < -2) throw DomainError("candidate_vertices: level must be 0, -1 or -2");
  if (dim < 1) throw DomainError("candidate_vertices: dimension must be >= 1");
  const long long lo = level - 1;
  const long long hi = level - static_cast<long long>(dim - 1) * (level - 1);

  std::vector<IntVector> out;
  IntVector cur(dim, Int(0));
  auto gen = [&](auto&& self, int pos, long long partial) -> void {
    if (pos == dim) {
      if (partial != level) return;
      if (is_zero_vector(cur)) return;
      if (!is_primitive(cur)) return;
      out.push_back(cur);
      return;
    }
    const int rest = dim - pos - 1;
    for (long long v = lo; v <= hi; ++v) {
      long long need = level - partial - v;
      if (need < rest * lo || need > rest * hi) continue;
      cur[pos] = Int(v);
      self(self, pos + 1, partial + v);
    }
    cur[pos] = Int(0);
  };
  gen(gen, 0, 0);
  return out;
}

ClassificationReport enumerate_3dm1(const SearchConfig& cfg) {
  const int d = cfg.dim;
  if (d < 2) throw DomainError("enumerate_3dm1: dimension must be >= 2");
  if (cfg.strict && d > 4) {
    throw CapabilityError("enumerate_3dm1: no runtime bound for dimension " + std::to_string(d));
  }
  const int target = cfg.target_vertices == 0 ? 3 * d - 1 : cfg.target_vertices;
  if (target != 3 * d - 1) {
    throw UnsupportedError("enumerate_3dm1: only the 3d-1 vertex count is supported");
  }

  const auto t0 = std::chrono::steady_clock::now();

  ClassificationReport report;
  report.dim = d;
  report.target_vertices = target;
  report.prune = cfg.prune;

  const std::vector<IntVector> cands0 = candidate_vertices(d, 0);
  const std::vector<IntVector> cands1 = candidate_vertices(d, -1);
  const std::vector<IntVector> cands2 = candidate_vertices(d, -2);
  PairSumIndex pairs1;
  pairs1.build(cands1);

  std::vector<IntVector> basis;
  for (int i = 0; i < d; ++i) {
    IntVector e(d, Int(0));
    e[i] = Int(1);
    basis.push_back(std::move(e));
  }

  std::vector<Polytope> survivors;
  for (const CaseColumn& col : case_table(d)) {
    if (!cfg.cases.count(col.tag)) continue;

    CaseContext ctx;
    ctx.column = col;
    ctx.basis = basis;
    ctx.cands0 = &cands0;
    ctx.cands1 = &cands1;
    ctx.cands2 = &cands2;
    ctx.pairs1 = &pairs1;
    ctx.prune = cfg.prune;
    ctx.dim = d;
    ctx.target_vertices = target;
    ctx.lo1 = -2;
    ctx.hi1 = -1 + 2LL * (d - 1);
    // The facet is special iff the vertex sum has non-negative coordinates;
    // the column fixes the coordinate total (1 for column 1, else 0), so the
    // admissible sums are the unit vectors or zero. This filter restates the
    // acceptance condition and is applied in both pruning modes.
    if (col.tag == CaseTag::Case1) {
      ctx.nu_targets = basis;
    } else {
      ctx.nu_targets = {IntVector(d, Int(0))};
    }
    gen_level0_subsets(d, col, cands0, cfg.prune, ctx.s0_list);

    const int nbranches = static_cast<int>(ctx.s0_list.size());
    std::vector<BranchResult> results(nbranches);
    const int jobs = std::max(1, std::min(cfg.jobs, 256));
    if (jobs == 1 || nbranches <= 1) {
      for (int i = 0; i < nbranches; ++i) process_s0(ctx, ctx.s0_list[i], results[i]);
    } else {
      std::atomic<int> next{0};
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t]() {
          try {
            for (;;) {
              int i = next.fetch_add(1);
              if (i >= nbranches) break;
              process_s0(ctx, ctx.s0_list[i], results[i]);
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    CaseStats stats;
    for (const BranchResult& r : results) {
      stats.candidates += r.stats.candidates;
      stats.survivors += r.stats.survivors;
    }
    report.cases[col.tag] = stats;
    for (const BranchResult& r : results) {
      for (const Polytope& p : r.survivors) survivors.push_back(p);
    }
  }

  report.representatives = dedupe(survivors);

  // Match representatives against the families expected at this dimension.
  std::vector<FamilyId> expected =
      d % 2 == 0 ? std::vector<FamilyId>{FamilyId::P1}
                 : std::vector<FamilyId>{FamilyId::P2, FamilyId::P3};
  for (FamilyId id : expected) {
    Polytope fam = make_family(id, d);
    int match = -1;
    for (int i = 0; i < static_cast<int>(report.representatives.size()); ++i) {
      if (are_isomorphic(fam, report.representatives[i])) {
        match = i;
        break;
      }
    }
    report.family_matches.push_back({family_name(id), match});
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

VerifyResult verify_theorem(int dim, int jobs) {
  SearchConfig cfg;
  cfg.dim = dim;
  cfg.jobs = jobs;
  VerifyResult result;
  result.report = enumerate_3dm1(cfg);
  const ClassificationReport& rep = result.report;

  for (const auto& [name, idx] : rep.family_matches) result.expected_families.push_back(name);

  const int expected_classes = dim % 2 == 0 ? 1 : 2;
  if (static_cast<int>(rep.representatives.size()) != expected_classes) {
    result.failures.push_back("expected " + std::to_string(expected_classes) + " classes, found " +
                              std::to_string(rep.representatives.size()));
  }
  for (int i = 0; i < static_cast<int>(rep.representatives.size()); ++i) {
    if (!is_smooth(rep.representatives[i])) {
      result.failures.push_back("representative " + std::to_string(i) + " is not smooth");
    }
  }
  std::set<int> matched;
  for (const auto& [name, idx] : rep.family_matches) {
    if (idx < 0) {
      result.failures.push_back("no representative is isomorphic to " + name);
    } else if (!matched.insert(idx).second) {
      result.failures.push_back("two families matched the same representative");
    }
  }
  if (static_cast<int>(matched.size()) != static_cast<int>(rep.representatives.size())) {
    result.failures.push_back("some representative matches no expected family");
  }
  result.pass = result.failures.empty();
  return result;
}

}  // namespace latfan

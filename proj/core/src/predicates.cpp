#include "latfan/predicates.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latfan {

namespace {

// Vertex index of vec in p, -1 if absent.
int vertex_index_of(const Polytope& p, const IntVector& vec) {
  for (int i = 0; i < p.vertex_count(); ++i) {
    if (p.vertex(i) == vec) return i;
  }
  return -1;
}

bool facet_has_vertex(const Facet& f, int vertex_index) {
  return std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), vertex_index);
}

}  // namespace

bool is_simplicial(const Polytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const Facet& f) { return f.is_simplex(p.dim()); });
}

bool is_reflexive(const Polytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.offset == Int(1); });
}

bool is_terminal(const Polytope& p) {
  if (!p.origin_interior()) throw DomainError("is_terminal: origin is not strictly interior");
  std::vector<IntVector> pts = p.lattice_points();
  if (static_cast<int>(pts.size()) != p.vertex_count() + 1) return false;
  const IntVector zero(p.dim(), Int(0));
  for (const auto& x : pts) {
    if (x == zero) continue;
    if (vertex_index_of(p, x) < 0) return false;
  }
  return true;
}

bool is_smooth(const Polytope& p) {
  if (!is_simplicial(p) || !is_reflexive(p)) return false;
  for (int i = 0; i < p.facet_count(); ++i) {
    if (normalized_volume(p, i) != Int(1)) return false;
  }
  return true;
}

const std::vector<RatCovector>& dual_basis(const Polytope& p, int facet) {
  const Facet& f = p.facet(facet);
  if (!f.has_dual_basis()) {
    throw DomainError("dual_basis: facet is not a simplex with an invertible vertex matrix");
  }
  return f.dual_basis;
}

NeighborResult neighbor(const Polytope& p, int facet, int vertex_index) {
  const Facet& f = p.facet(facet);
  if (!facet_has_vertex(f, vertex_index)) {
    throw DomainError("neighbor: vertex is not on the facet");
  }
  std::vector<int> ridge;
  for (int i : f.vertex_indices) {
    if (i != vertex_index) ridge.push_back(i);
  }
  int other = -1;
  for (int g = 0; g < p.facet_count(); ++g) {
    if (g == facet) continue;
    const Facet& cand = p.facet(g);
    bool contains_ridge = std::includes(cand.vertex_indices.begin(), cand.vertex_indices.end(),
                                        ridge.begin(), ridge.end());
    if (!contains_ridge) continue;
    if (other >= 0) throw ContradictionError("neighbor: ridge lies on more than two facets");
    other = g;
  }
  if (other < 0) throw ContradictionError("neighbor: ridge has no second facet");
  const Facet& g = p.facet(other);
  if (g.vertex_indices.size() != ridge.size() + 1) {
    throw DomainError("neighbor: neighboring facet is not a simplex");
  }
  int nv = -1;
  for (int i : g.vertex_indices) {
    if (!std::binary_search(ridge.begin(), ridge.end(), i)) nv = i;
  }
  return NeighborResult{other, nv};
}

bool check_uf_relation(const Polytope& p, int facet, int vertex_index, const IntVector& x) {
  const Facet& f = p.facet(facet);
  const std::vector<RatCovector>& duals = dual_basis(p, facet);
  NeighborResult nb = neighbor(p, facet, vertex_index);
  RatCovector uf = f.u();
  RatCovector ufp = p.facet(nb.facet).u();
  int pos = static_cast<int>(std::lower_bound(f.vertex_indices.begin(), f.vertex_indices.end(),
                                              vertex_index) -
                             f.vertex_indices.begin());
  Rational lhs = dot(ufp, x);
  Rational rhs = dot(uf, x) +
                 (dot(ufp, p.vertex(vertex_index)) - Rational(Int(1))) * dot(duals[pos], x);
  return lhs == rhs;
}

bool check_coef_bound(const Polytope& p, int facet) {
  const Facet& f = p.facet(facet);
  const std::vector<RatCovector>& duals = dual_basis(p, facet);
  RatCovector uf = f.u();
  for (size_t vi = 0; vi < f.vertex_indices.size(); ++vi) {
    NeighborResult nb = neighbor(p, facet, f.vertex_indices[vi]);
    const Facet& nf = p.facet(nb.facet);
    for (int x = 0; x < p.vertex_count(); ++x) {
      Rational lhs = dot(uf, p.vertex(x)) - Rational(Int(1));
      Rational rhs = dot(duals[vi], p.vertex(x));
      if (lhs > rhs) return false;
      if (lhs == rhs && !facet_has_vertex(nf, x)) return false;
    }
  }
  return true;
}

int LevelDistribution::count_at(long long level) const {
  auto it = counts.find(level);
  return it == counts.end() ? 0 : it->second;
}

long long LevelDistribution::weighted_sum() const {
  long long s = 0;
  for (const auto& [level, count] : counts) s += level * count;
  return s;
}

LevelDistribution levels(const Polytope& p, int facet) {
  const Facet& f = p.facet(facet);
  LevelDistribution dist;
  dist.facet = facet;
  for (int i = 0; i < p.vertex_count(); ++i) {
    Int num = dot(f.normal, p.vertex(i));
    if (f.offset == Int(0) || num.value() % f.offset.value() != 0) {
      throw DomainError("levels: non-integral pairing value on facet");
    }
    ++dist.counts[exact_div(num, f.offset).value()];
  }
  return dist;
}

bool is_special_facet(const Polytope& p, int facet) {
  const std::vector<RatCovector>& duals = dual_basis(p, facet);
  IntVector nu = p.vertex_sum();
  return std::all_of(duals.begin(), duals.end(),
                     [&](const RatCovector& u) { return dot(u, nu) >= Rational(Int(0)); });
}

std::vector<int> special_facets(const Polytope& p) {
  if (!p.origin_interior()) throw DomainError("special_facets: origin is not strictly interior");
  if (!is_simplicial(p)) throw DomainError("special_facets: polytope is not simplicial");
  std::vector<int> out;
  for (int i = 0; i < p.facet_count(); ++i) {
    if (is_special_facet(p, i)) out.push_back(i);
  }
  if (out.empty()) throw ContradictionError("special_facets: no special facet found");
  return out;
}

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1:
      return "case1";
    case CaseTag::Case2:
      return "case2";
    case CaseTag::Case3:
      return "case3";
  }
  return "?";
}

CaseTag case_of(const Polytope& p, int facet) {
  const int d = p.dim();
  if (p.vertex_count() != 3 * d - 1) {
    throw DomainError("case_of: polytope does not have 3d-1 vertices");
  }
  if (!is_reflexive(p) || !is_simplicial(p) || !is_terminal(p)) {
    throw DomainError("case_of: polytope is not terminal simplicial reflexive");
  }
  if (!is_special_facet(p, facet)) throw DomainError("case_of: facet is not special");

  auto column = [&](int c0, int c1, int c2) {
    std::map<long long, int, std::greater<long long>> m;
    m[1] = d;
    if (c0) m[0] = c0;
    if (c1) m[-1] = c1;
    if (c2) m[-2] = c2;
    return m;
  };
  const auto dist = levels(p, facet).counts;
  if (dist == column(d, d - 1, 0)) return CaseTag::Case1;
  if (dist == column(d, d - 2, 1)) return CaseTag::Case2;
  if (dist == column(d - 1, d, 0)) return CaseTag::Case3;
  std::ostringstream os;
  os << "case_of: level distribution of facet " << facet << " matches no admissible column:";
  for (const auto& [level, count] : dist) os << " " << level << ":" << count;
  throw ContradictionError(os.str());
}

namespace {

std::vector<int> vertices_at_level(const Polytope& p, const Facet& f, long long level) {
  std::vector<int> out;
  for (int i = 0; i < p.vertex_count(); ++i) {
    if (dot(f.normal, p.vertex(i)) == f.offset * Int(level)) out.push_back(i);
  }
  return out;
}

}  // namespace

bool h0_neighbors_check(const Polytope& p, int facet) {
  const Facet& f = p.facet(facet);
  const std::vector<RatCovector>& duals = dual_basis(p, facet);
  std::vector<int> level0 = vertices_at_level(p, f, 0);
  if (static_cast<int>(level0.size()) > p.dim()) return false;
  for (int x : level0) {
    for (size_t vi = 0; vi < f.vertex_indices.size(); ++vi) {
      if (dot(duals[vi], p.vertex(x)) < Rational(Int(0))) {
        NeighborResult nb = neighbor(p, facet, f.vertex_indices[vi]);
        if (nb.vertex != x) return false;
      }
    }
  }
  return true;
}

std::optional<std::map<int, int>> h0_structure(const Polytope& p, int facet) {
  const Facet& f = p.facet(facet);
  const std::vector<RatCovector>& duals = dual_basis(p, facet);
  std::vector<int> level0 = vertices_at_level(p, f, 0);
  const int d = p.dim();
  if (static_cast<int>(level0.size()) < d) return std::nullopt;
  if (static_cast<int>(level0.size()) > d) {
    throw ContradictionError("h0_structure: more than d vertices at level 0");
  }

  std::map<int, int> structure;
  std::set<int> used;
  for (size_t vi = 0; vi < f.vertex_indices.size(); ++vi) {
    const int y = f.vertex_indices[vi];
    std::vector<int> owned;
    for (int x : level0) {
      if (dot(duals[vi], p.vertex(x)) < Rational(Int(0))) owned.push_back(x);
    }
    if (owned.size() != 1) {
      throw ContradictionError("h0_structure: vertex " + to_string(p.vertex(y)) +
                               " does not own exactly one level-0 vertex");
    }
    const int x = owned[0];
    IntVector z = add(p.vertex(x), p.vertex(y));
    int zi = vertex_index_of(p, z);
    if (zi < 0 || !facet_has_vertex(f, zi) || zi == y) {
      throw ContradictionError("h0_structure: level-0 vertex " + to_string(p.vertex(x)) +
                               " is not of the form -y+z_y for y = " + to_string(p.vertex(y)));
    }
    if (!used.insert(x).second) {
      throw ContradictionError("h0_structure: level-0 vertex " + to_string(p.vertex(x)) +
                               " paired with two facet vertices");
    }
    structure[y] = zi;
  }
  return structure;
}

bool hminus1_antipodal_check(const Polytope& p, int facet) {
  const Facet& f = p.facet(facet);
  std::vector<int> level0 = vertices_at_level(p, f, 0);
  if (static_cast<int>(level0.size()) != p.dim()) {
    throw DomainError("hminus1_antipodal_check: facet does not have d vertices at level 0");
  }
  for (int x : vertices_at_level(p, f, -1)) {
    int anti = vertex_index_of(p, negate(p.vertex(x)));
    if (anti < 0 || !facet_has_vertex(f, anti)) return false;
  }
  return true;
}

bool exclusion_check(const Polytope& p, int facet, int v1_index, int v2_index) {
  const Facet& f = p.facet(facet);
  if (v1_index == v2_index) throw DomainError("exclusion_check: v1 == v2");
  const std::vector<RatCovector>& duals = dual_basis(p, facet);
  auto pos_of = [&](int v) {
    if (!facet_has_vertex(f, v)) throw DomainError("exclusion_check: vertex is not on the facet");
    return static_cast<int>(std::lower_bound(f.vertex_indices.begin(), f.vertex_indices.end(), v) -
                            f.vertex_indices.begin());
  };
  const int p1 = pos_of(v1_index), p2 = pos_of(v2_index);
  NeighborResult nb1 = neighbor(p, facet, v1_index);
  NeighborResult nb2 = neighbor(p, facet, v2_index);
  if (nb1.vertex == nb2.vertex) throw DomainError("exclusion_check: neighboring vertices coincide");
  const Rational minus_one(Int(-1));
  auto at_level = [&](int x, long long lv) {
    return dot(f.normal, p.vertex(x)) == f.offset * Int(lv);
  };
  if (!at_level(nb1.vertex, 0) || !at_level(nb2.vertex, 0) ||
      dot(duals[p1], p.vertex(nb1.vertex)) != minus_one ||
      dot(duals[p2], p.vertex(nb2.vertex)) != minus_one) {
    throw DomainError("exclusion_check: neighboring vertices do not satisfy the hypotheses");
  }
  for (int x : vertices_at_level(p, f, -1)) {
    if (dot(duals[p1], p.vertex(x)) == minus_one && dot(duals[p2], p.vertex(x)) == minus_one) {
      return false;
    }
  }
  return true;
}

Int normalized_volume(const Polytope& p, int facet) {
  const Facet& f = p.facet(facet);
  if (!f.is_simplex(p.dim())) throw DomainError("normalized_volume: facet is not a simplex");
  std::vector<IntVector> rows;
  for (int i : f.vertex_indices) rows.push_back(p.vertex(i));
  return abs(det(IntMatrix(rows)));
}

LemmaReport run_lemma_suite(const Polytope& p) {
  if (!p.origin_interior()) throw DomainError("run_lemma_suite: origin is not strictly interior");
  if (!is_simplicial(p)) throw DomainError("run_lemma_suite: polytope is not simplicial");

  LemmaReport report;
  auto violate = [&](const std::string& check, const std::string& witness) {
    report.violations.push_back(LemmaViolation{check, witness});
  };
  const int d = p.dim();
  const bool reflexive = is_reflexive(p);
  const bool terminal = reflexive && is_terminal(p);

  for (int fi = 0; fi < p.facet_count(); ++fi) {
    const Facet& f = p.facet(fi);
    const std::vector<RatCovector>& duals = dual_basis(p, fi);
    RatCovector uf = f.u();

    // Pivot identity relating u_F and u_{N(F,v)}.
    for (size_t vi = 0; vi < f.vertex_indices.size(); ++vi) {
      const int v = f.vertex_indices[vi];
      NeighborResult nb = neighbor(p, fi, v);
      RatCovector ufp = p.facet(nb.facet).u();
      Rational scale = dot(ufp, p.vertex(v)) - Rational(Int(1));
      for (int x = 0; x < p.vertex_count(); ++x) {
        ++report.checks;
        Rational lhs = dot(ufp, p.vertex(x));
        Rational rhs = dot(uf, p.vertex(x)) + scale * dot(duals[vi], p.vertex(x));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "facet=" << fi << " v=" << to_string(p.vertex(v)) << " x=" << to_string(p.vertex(x));
          violate("uf_relation", os.str());
        }
      }

      // Coefficient bound with its equality case on the neighboring facet.
      const Facet& nf = p.facet(nb.facet);
      for (int x = 0; x < p.vertex_count(); ++x) {
        ++report.checks;
        Rational lhs = dot(uf, p.vertex(x)) - Rational(Int(1));
        Rational rhs = dot(duals[vi], p.vertex(x));
        if (lhs > rhs) {
          violate("coef_bound", "facet=" + std::to_string(fi) + " v=" + to_string(p.vertex(v)) +
                                    " x=" + to_string(p.vertex(x)));
        } else if (lhs == rhs && !facet_has_vertex(nf, x)) {
          violate("coef_bound_equality_incidence",
                  "facet=" + std::to_string(fi) + " v=" + to_string(p.vertex(v)) +
                      " x=" + to_string(p.vertex(x)));
        }
      }
    }

    if (!reflexive) continue;

    std::vector<int> level0 = vertices_at_level(p, f, 0);
    ++report.checks;
    if (static_cast<int>(level0.size()) > d) {
      violate("h0_count", "facet=" + std::to_string(fi));
    }
    for (int x : level0) {
      for (size_t vi = 0; vi < f.vertex_indices.size(); ++vi) {
        if (dot(duals[vi], p.vertex(x)) < Rational(Int(0))) {
          ++report.checks;
          NeighborResult nb = neighbor(p, fi, f.vertex_indices[vi]);
          if (nb.vertex != x) {
            violate("h0_neighbor", "facet=" + std::to_string(fi) + " x=" + to_string(p.vertex(x)));
          }
        }
      }
    }

    // Exclusion lemma wherever its hypotheses hold.
    for (size_t a = 0; a < f.vertex_indices.size(); ++a) {
      for (size_t b = a + 1; b < f.vertex_indices.size(); ++b) {
        NeighborResult n1 = neighbor(p, fi, f.vertex_indices[a]);
        NeighborResult n2 = neighbor(p, fi, f.vertex_indices[b]);
        const Rational minus_one(Int(-1));
        bool applies = n1.vertex != n2.vertex &&
                       dot(f.normal, p.vertex(n1.vertex)) == Int(0) &&
                       dot(f.normal, p.vertex(n2.vertex)) == Int(0) &&
                       dot(duals[a], p.vertex(n1.vertex)) == minus_one &&
                       dot(duals[b], p.vertex(n2.vertex)) == minus_one;
        if (!applies) continue;
        ++report.checks;
        if (!exclusion_check(p, fi, f.vertex_indices[a], f.vertex_indices[b])) {
          violate("exclusion", "facet=" + std::to_string(fi) + " v1=" +
                                   to_string(p.vertex(f.vertex_indices[a])) + " v2=" +
                                   to_string(p.vertex(f.vertex_indices[b])));
        }
      }
    }

    if (terminal && static_cast<int>(level0.size()) == d) {
      ++report.checks;
      try {
        h0_structure(p, fi);
      } catch (const ContradictionError& e) {
        violate("h0_structure", e.what());
      }
      ++report.checks;
      if (!hminus1_antipodal_check(p, fi)) {
        violate("hminus1_antipodal", "facet=" + std::to_string(fi));
      }
    }
  }

  if (reflexive) {
    std::vector<int> special;
    try {
      special = special_facets(p);
    } catch (const ContradictionError&) {
      violate("special_nonempty", "no special facet");
    }
    for (int fi : special) {
      ++report.checks;
      LevelDistribution dist = levels(p, fi);
      long long lower = 0;
      for (const auto& [level, count] : dist.counts) {
        if (level <= -1) lower += level * count;
      }
      if (d + lower < 0) {
        violate("special_sum", "facet=" + std::to_string(fi));
      }
    }
    ++report.checks;
    if (p.vertex_count() > 3 * d) {
      violate("vertex_bound", "count=" + std::to_string(p.vertex_count()));
    }
  }

  return report;
}

}  // namespace latfan

#include "latfan/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latfan/predicates.hpp"

namespace latfan {

namespace {

std::vector<long long> key_of(const IntVector& v) {
  std::vector<long long> k;
  k.reserve(v.size());
  for (Int x : v) k.push_back(x.value());
  return k;
}

std::vector<IntVector> sorted_rows(const Polytope& p) {
  std::vector<IntVector> rows = p.vertices();
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Pairing values <u_F, v> of one facet against every vertex, sorted.
std::vector<Rational> row_signature(const Polytope& p, int facet) {
  RatCovector u = p.facet(facet).u();
  std::vector<Rational> sig;
  sig.reserve(p.vertex_count());
  for (int i = 0; i < p.vertex_count(); ++i) sig.push_back(dot(u, p.vertex(i)));
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<Rational> col_signature(const Polytope& p, int vertex) {
  std::vector<Rational> sig;
  sig.reserve(p.facet_count());
  for (int i = 0; i < p.facet_count(); ++i) sig.push_back(dot(p.facet(i).u(), p.vertex(vertex)));
  std::sort(sig.begin(), sig.end());
  return sig;
}

struct FacetSignature {
  Int volume;
  std::vector<Rational> row;
  bool operator==(const FacetSignature&) const = default;
};

}  // namespace

Fingerprint fingerprint(const Polytope& p) {
  if (!is_reflexive(p)) throw DomainError("fingerprint: polytope is not reflexive");
  if (!is_simplicial(p)) throw DomainError("fingerprint: polytope is not simplicial");
  Fingerprint fp;
  fp.dim = p.dim();
  fp.vertex_count = p.vertex_count();
  fp.lattice_point_count = static_cast<long long>(p.lattice_points().size());
  for (int i = 0; i < p.facet_count(); ++i) {
    fp.facet_volumes.push_back(normalized_volume(p, i).value());
    std::vector<long long> row;
    for (int v = 0; v < p.vertex_count(); ++v) {
      row.push_back(dot(p.facet(i).normal, p.vertex(v)).value());
    }
    std::sort(row.begin(), row.end());
    fp.pairing_rows.push_back(std::move(row));
  }
  std::sort(fp.facet_volumes.begin(), fp.facet_volumes.end());
  std::sort(fp.pairing_rows.begin(), fp.pairing_rows.end());
  for (int v = 0; v < p.vertex_count(); ++v) {
    std::vector<long long> col;
    for (int i = 0; i < p.facet_count(); ++i) {
      col.push_back(dot(p.facet(i).normal, p.vertex(v)).value());
    }
    std::sort(col.begin(), col.end());
    fp.pairing_cols.push_back(std::move(col));
  }
  std::sort(fp.pairing_cols.begin(), fp.pairing_cols.end());
  return fp;
}

std::optional<IntMatrix> isomorphism_witness(const Polytope& p, const Polytope& q) {
  for (const Polytope* x : {&p, &q}) {
    if (!is_simplicial(*x)) {
      throw UnsupportedError("isomorphism: only simplicial polytopes are supported");
    }
    if (!x->origin_interior()) {
      throw UnsupportedError("isomorphism: origin must be strictly interior");
    }
  }
  const int dim = p.dim();
  if (dim != q.dim() || p.vertex_count() != q.vertex_count() ||
      p.facet_count() != q.facet_count()) {
    return std::nullopt;
  }

  // Multiset invariants first; unequal multisets cannot be related by a
  // lattice isomorphism.
  auto volumes = [](const Polytope& x) {
    std::vector<Int> v;
    for (int i = 0; i < x.facet_count(); ++i) v.push_back(normalized_volume(x, i));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (volumes(p) != volumes(q)) return std::nullopt;

  std::vector<FacetSignature> sig_p(p.facet_count()), sig_q(q.facet_count());
  for (int i = 0; i < p.facet_count(); ++i) {
    sig_p[i] = FacetSignature{normalized_volume(p, i), row_signature(p, i)};
  }
  for (int i = 0; i < q.facet_count(); ++i) {
    sig_q[i] = FacetSignature{normalized_volume(q, i), row_signature(q, i)};
  }

  // Anchor the facet of p whose signature is rarest among p's facets.
  int anchor = 0;
  {
    int best_count = p.facet_count() + 1;
    for (int i = 0; i < p.facet_count(); ++i) {
      int c = 0;
      for (int j = 0; j < p.facet_count(); ++j) {
        if (sig_p[j] == sig_p[i]) ++c;
      }
      if (c < best_count) {
        best_count = c;
        anchor = i;
      }
    }
  }
  const Facet& fa = p.facet(anchor);

  std::vector<std::vector<Rational>> colsig_q(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) colsig_q[v] = col_signature(q, v);

  // Inverse of the anchor's vertex matrix, as rational rows.
  std::vector<IntVector> arows;
  for (int i : fa.vertex_indices) arows.push_back(p.vertex(i));
  IntMatrix amat(arows);
  std::vector<RatCovector> duals = dual_covectors(amat);  // duals[k][i]: (A^-1)[i][k]

  std::set<std::vector<long long>> q_vertex_set;
  for (const auto& v : q.vertices()) q_vertex_set.insert(key_of(v));

  // Candidate images per anchor position, filtered by vertex column
  // signature.
  std::vector<std::vector<Rational>> colsig_anchor;
  for (int i : fa.vertex_indices) colsig_anchor.push_back(col_signature(p, i));

  std::vector<int> image(dim, -1);
  std::vector<bool> used;

  auto try_leaf = [&](const std::vector<int>& img) -> std::optional<IntMatrix> {
    // T = A^-1 B must be integral with |det T| = 1 and V(p) T = V(q).
    std::vector<IntVector> trows(dim, IntVector(dim));
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        Rational t;
        for (int k = 0; k < dim; ++k) {
          t += duals[k][i] * Rational(q.vertex(img[k])[j]);
        }
        if (!t.is_integer()) return std::nullopt;
        trows[i][j] = t.to_int();
      }
    }
    IntMatrix t(trows);
    Int dt = det(t);
    if (dt != Int(1) && dt != Int(-1)) return std::nullopt;
    for (const auto& v : p.vertices()) {
      IntVector img_v(dim, Int(0));
      for (int j = 0; j < dim; ++j) {
        Int s = 0;
        for (int i = 0; i < dim; ++i) s += v[i] * t.at(i, j);
        img_v[j] = s;
      }
      if (!q_vertex_set.count(key_of(img_v))) return std::nullopt;
    }
    return t;
  };

  std::optional<IntMatrix> found;
  auto assign = [&](auto&& self, int pos, const Facet& fg) -> bool {
    if (pos == dim) {
      found = try_leaf(image);
      return found.has_value();
    }
    for (int k = 0; k < dim; ++k) {
      if (used[k]) continue;
      int w = fg.vertex_indices[k];
      if (colsig_q[w] != colsig_anchor[pos]) continue;
      image[pos] = w;
      used[k] = true;
      if (self(self, pos + 1, fg)) return true;
      used[k] = false;
    }
    return false;
  };

  for (int g = 0; g < q.facet_count(); ++g) {
    if (!(sig_q[g] == sig_p[anchor])) continue;
    used.assign(dim, false);
    if (assign(assign, 0, q.facet(g))) return found;
  }
  return std::nullopt;
}

bool are_isomorphic(const Polytope& p, const Polytope& q) {
  return isomorphism_witness(p, q).has_value();
}

std::vector<Polytope> dedupe(const std::vector<Polytope>& ps) {
  std::map<Fingerprint, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
    groups[fingerprint(ps[i])].push_back(i);
  }

  std::vector<Polytope> out;
  for (const auto& [fp, members] : groups) {
    // Pairwise isomorphism within the fingerprint group.
    std::vector<std::vector<int>> classes;
    for (int idx : members) {
      bool placed = false;
      for (auto& cls : classes) {
        if (are_isomorphic(ps[cls[0]], ps[idx])) {
          cls.push_back(idx);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({idx});
    }
    // Canonical representative: the lexicographically smallest row-sorted
    // vertex matrix over the class, independent of input order.
    std::vector<std::vector<IntVector>> reps;
    for (const auto& cls : classes) {
      std::vector<IntVector> best = sorted_rows(ps[cls[0]]);
      for (size_t i = 1; i < cls.size(); ++i) {
        std::vector<IntVector> cand = sorted_rows(ps[cls[i]]);
        if (cand < best) best = cand;
      }
      reps.push_back(std::move(best));
    }
    std::sort(reps.begin(), reps.end());
    for (auto& rows : reps) {
      out.push_back(Polytope::make(fp.dim, std::move(rows)));
    }
  }
  return out;
}

}  // namespace latfan

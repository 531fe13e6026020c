#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace latfan::test {

Int cofactor_det(const IntMatrix& m) {
  const int n = m.row_count();
  if (n != m.col_count()) throw DimensionError("cofactor_det: not square");
  if (n == 0) return Int(1);
  if (n == 1) return m.at(0, 0);
  Int total = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == Int(0)) continue;
    std::vector<IntVector> minor;
    for (int i = 1; i < n; ++i) {
      IntVector row;
      for (int j = 0; j < n; ++j) {
        if (j != c) row.push_back(m.at(i, j));
      }
      minor.push_back(std::move(row));
    }
    Int term = m.at(0, c) * cofactor_det(IntMatrix(minor));
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

namespace {

// Generalized cross product: component k is the signed minor obtained by
// deleting column k from the (d-1) x d direction matrix.
IntVector cross_normal(const std::vector<IntVector>& dirs, int dim) {
  IntVector a(dim, Int(0));
  for (int k = 0; k < dim; ++k) {
    std::vector<IntVector> minor;
    for (const auto& d : dirs) {
      IntVector row;
      for (int j = 0; j < dim; ++j) {
        if (j != k) row.push_back(d[j]);
      }
      minor.push_back(std::move(row));
    }
    Int v = cofactor_det(IntMatrix(minor));
    a[k] = (k % 2 == 0) ? v : -v;
  }
  return a;
}

}  // namespace

std::vector<RawFacet> brute_force_facets(int dim, const std::vector<IntVector>& points) {
  const int n = static_cast<int>(points.size());
  std::map<std::vector<long long>, RawFacet> found;

  std::vector<int> subset(dim);
  auto consider = [&]() {
    IntVector a;
    if (dim == 1) {
      a = IntVector{Int(1)};
    } else {
      std::vector<IntVector> dirs;
      for (int i = 1; i < dim; ++i) dirs.push_back(sub(points[subset[i]], points[subset[0]]));
      a = cross_normal(dirs, dim);
      if (is_zero_vector(a)) return;  // affinely dependent subset
      a = primitive(a);
    }
    Int b = dot(a, points[subset[0]]);
    bool all_le = true, all_ge = true;
    for (const auto& p : points) {
      Int v = dot(a, p);
      if (v > b) all_le = false;
      if (v < b) all_ge = false;
    }
    if (!all_le && !all_ge) return;
    if (!all_le) {
      a = negate(a);
      b = -b;
    }
    std::vector<long long> key;
    for (Int x : a) key.push_back(x.value());
    key.push_back(b.value());
    if (found.count(key)) return;
    RawFacet f;
    f.normal = a;
    f.offset = b;
    for (int i = 0; i < n; ++i) {
      if (dot(a, points[i]) == b) f.incident.push_back(i);
    }
    found[key] = std::move(f);
  };

  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == dim) {
      consider();
      return;
    }
    for (int i = start; i < n; ++i) {
      subset[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);

  std::vector<RawFacet> out;
  for (auto& [key, f] : found) out.push_back(std::move(f));
  return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, int dim) {
  std::vector<IntVector> rows = IntMatrix::identity(dim).rows();
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> op(0, 5);
  const long long bound = 20;
  for (int step = 0; step < 4 * dim; ++step) {
    int i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0:
        std::swap(rows[i], rows[j]);
        break;
      case 1:
        rows[i] = negate(rows[i]);
        break;
      default: {
        int c = coef(rng);
        if (i == j || c == 0) break;
        IntVector cand = rows[i];
        for (int k = 0; k < dim; ++k) cand[k] += Int(c) * rows[j][k];
        bool small = std::all_of(cand.begin(), cand.end(),
                                 [&](Int x) { return abs(x) <= Int(bound); });
        if (small) rows[i] = std::move(cand);
        break;
      }
    }
  }
  IntMatrix t(rows);
  Int d = det(t);
  if (d != Int(1) && d != Int(-1)) throw ContradictionError("random_unimodular: det != +-1");
  return t;
}

IntVector apply_map(const IntVector& v, const IntMatrix& t) {
  const int dim = t.col_count();
  IntVector out(dim, Int(0));
  for (int j = 0; j < dim; ++j) {
    Int s = 0;
    for (int i = 0; i < t.row_count(); ++i) s += v[i] * t.at(i, j);
    out[j] = s;
  }
  return out;
}

Polytope apply_map(const Polytope& p, const IntMatrix& t) {
  std::vector<IntVector> rows;
  for (const auto& v : p.vertices()) rows.push_back(apply_map(v, t));
  return Polytope::make(p.dim(), std::move(rows));
}

std::vector<Polytope> corpus(int max_dim) {
  std::vector<Polytope> out;
  for (int d = 2; d <= max_dim; d += 2) out.push_back(make_family(FamilyId::P1, d));
  for (int d = 3; d <= max_dim; d += 2) {
    out.push_back(make_family(FamilyId::P2, d));
    out.push_back(make_family(FamilyId::P3, d));
  }
  out.push_back(make_family(FamilyId::DelPezzo2, 2));
  for (int d = 2; d <= max_dim; ++d) out.push_back(make_family(FamilyId::Cross, d));
  out.push_back(make_family(FamilyId::Figure2, 2));
  return out;
}

}  // namespace latfan::test

#include "latfan/families.hpp"

#include <string>

namespace latfan {

namespace {

IntVector unit(int dim, int i) {
  IntVector e(dim, Int(0));
  e[i] = Int(1);
  return e;
}

IntVector unit_diff(int dim, int i, int j) {  // e_i - e_j
  IntVector v(dim, Int(0));
  v[i] = Int(1);
  v[j] = Int(-1);
  return v;
}

}  // namespace

std::optional<FamilyId> family_from_name(std::string_view name) {
  if (name == "p1") return FamilyId::P1;
  if (name == "p2") return FamilyId::P2;
  if (name == "p3") return FamilyId::P3;
  if (name == "dp2") return FamilyId::DelPezzo2;
  if (name == "cross") return FamilyId::Cross;
  if (name == "fig2") return FamilyId::Figure2;
  return std::nullopt;
}

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::P1:
      return "p1";
    case FamilyId::P2:
      return "p2";
    case FamilyId::P3:
      return "p3";
    case FamilyId::DelPezzo2:
      return "dp2";
    case FamilyId::Cross:
      return "cross";
    case FamilyId::Figure2:
      return "fig2";
  }
  return "?";
}

int family_fixed_dim(FamilyId id) {
  return (id == FamilyId::DelPezzo2 || id == FamilyId::Figure2) ? 2 : 0;
}

std::vector<IntVector> family_vertices(FamilyId id, int dim) {
  std::vector<IntVector> v;
  switch (id) {
    case FamilyId::P1: {
      if (dim < 2 || dim % 2 != 0) throw DomainError("p1 requires even dimension >= 2");
      // e1, +-e2, ..., +-e_d and the difference pairs +-(e1-e2), +-(e3-e4),
      // ..., +-(e_{d-1}-e_d). The pairs run over disjoint consecutive index
      // pairs so the total is 3d-1; this is the unique reading of the listing
      // consistent with that count.
      v.push_back(unit(dim, 0));
      for (int i = 1; i < dim; ++i) {
        v.push_back(unit(dim, i));
        v.push_back(negate(unit(dim, i)));
      }
      for (int i = 0; i + 1 < dim; i += 2) {
        v.push_back(unit_diff(dim, i, i + 1));
        v.push_back(unit_diff(dim, i + 1, i));
      }
      break;
    }
    case FamilyId::P2: {
      if (dim < 3 || dim % 2 == 0) throw DomainError("p2 requires odd dimension >= 3");
      // +-e1, ..., +-e_{d-1}, e_d; +-(e1-e2), ..., +-(e_{d-2}-e_{d-1}) over
      // disjoint consecutive pairs; and e1-e_d.
      for (int i = 0; i + 1 < dim; ++i) {
        v.push_back(unit(dim, i));
        v.push_back(negate(unit(dim, i)));
      }
      v.push_back(unit(dim, dim - 1));
      for (int i = 0; i + 2 < dim; i += 2) {
        v.push_back(unit_diff(dim, i, i + 1));
        v.push_back(unit_diff(dim, i + 1, i));
      }
      v.push_back(unit_diff(dim, 0, dim - 1));
      break;
    }
    case FamilyId::P3: {
      if (dim < 3 || dim % 2 == 0) throw DomainError("p3 requires odd dimension >= 3");
      // +-e1, ..., +-e_d; +-(e2-e3), +-(e4-e5), ..., +-(e_{d-1}-e_d). The
      // difference pairs run over the disjoint consecutive pairs of the last
      // d-1 indices, which is the reading that yields 3d-1 points (the count
      // is asserted below, and the d=3 instance is pinned by enumeration).
      for (int i = 0; i < dim; ++i) {
        v.push_back(unit(dim, i));
        v.push_back(negate(unit(dim, i)));
      }
      for (int i = 1; i + 1 < dim; i += 2) {
        v.push_back(unit_diff(dim, i, i + 1));
        v.push_back(unit_diff(dim, i + 1, i));
      }
      break;
    }
    case FamilyId::DelPezzo2: {
      if (dim != 2) throw DomainError("dp2 is 2-dimensional");
      v = {unit(2, 0), negate(unit(2, 0)), unit(2, 1), negate(unit(2, 1)),
           unit_diff(2, 0, 1), unit_diff(2, 1, 0)};
      break;
    }
    case FamilyId::Cross: {
      if (dim < 1) throw DomainError("cross requires dimension >= 1");
      for (int i = 0; i < dim; ++i) {
        v.push_back(unit(dim, i));
        v.push_back(negate(unit(dim, i)));
      }
      break;
    }
    case FamilyId::Figure2: {
      if (dim != 2) throw DomainError("fig2 is 2-dimensional");
      v = {{Int(-1), Int(0)}, {Int(-1), Int(1)}, {Int(1), Int(1)}, {Int(1), Int(0)}, {Int(0), Int(-1)}};
      break;
    }
  }
  return v;
}

Polytope make_family(FamilyId id, int dim) {
  std::vector<IntVector> pts = family_vertices(id, dim);
  size_t expected = pts.size();
  switch (id) {
    case FamilyId::P1:
    case FamilyId::P2:
    case FamilyId::P3:
      if (static_cast<int>(expected) != 3 * dim - 1) {
        throw ContradictionError(std::string(family_name(id)) + ": vertex list is not 3d-1 points");
      }
      break;
    default:
      break;
  }
  Polytope p = Polytope::make(dim, std::move(pts));
  if (static_cast<size_t>(p.vertex_count()) != expected) {
    throw ContradictionError(std::string(family_name(id)) + ": listed points are not all vertices");
  }
  return p;
}

Polytope direct_sum(const Polytope& p, const Polytope& q) {
  if (!p.origin_interior() || !q.origin_interior()) {
    throw DomainError("direct_sum: both summands need the origin strictly interior");
  }
  const int dim = p.dim() + q.dim();
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices()) {
    IntVector x(dim, Int(0));
    std::copy(v.begin(), v.end(), x.begin());
    pts.push_back(std::move(x));
  }
  for (const auto& w : q.vertices()) {
    IntVector x(dim, Int(0));
    std::copy(w.begin(), w.end(), x.begin() + p.dim());
    pts.push_back(std::move(x));
  }
  return Polytope::make(dim, std::move(pts));
}

}  // namespace latfan

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "latfan/polytope.hpp"

namespace latfan {

// The named polytopes used as fixtures and expected classification output.
//   P1        even d >= 2, 3d-1 vertices
//   P2, P3    odd d >= 3, 3d-1 vertices
//   DelPezzo2 the hexagon conv{+-e1, +-e2, +-(e1-e2)}, d = 2
//   Cross     conv{+-e_i}, any d >= 1
//   Figure2   a simplicial reflexive self-dual pentagon that is not terminal
enum class FamilyId { P1, P2, P3, DelPezzo2, Cross, Figure2 };

std::optional<FamilyId> family_from_name(std::string_view name);  // p1 p2 p3 dp2 cross fig2
const char* family_name(FamilyId id);
// Fixed dimension of the family, or 0 when the dimension is a free parameter.
int family_fixed_dim(FamilyId id);

// Vertex rows in their conventional listing order.
// DomainError on a parity/dimension violation.
std::vector<IntVector> family_vertices(FamilyId id, int dim);

// The family polytope; vertex count and expected predicates are asserted at
// construction.
Polytope make_family(FamilyId id, int dim);

// Direct sum: vertices (v, 0) for v in p and (0, w) for w in q.
// DomainError unless both polytopes have the origin strictly interior.
Polytope direct_sum(const Polytope& p, const Polytope& q);

}  // namespace latfan

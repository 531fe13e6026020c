#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latfan/polytope.hpp"

namespace latfan {

// True iff every facet has exactly dim vertices (for polytopes, all faces are
// then simplices).
bool is_simplicial(const Polytope& p);

// True iff the origin is strictly interior and every facet lies on a
// hyperplane <u, x> = 1 with integral u.
bool is_reflexive(const Polytope& p);

// True iff the only lattice points of p are its vertices and the origin.
// DomainError unless the origin is strictly interior.
bool is_terminal(const Polytope& p);

// True iff p is simplicial, reflexive, and every facet's vertex matrix has
// determinant +-1 (each facet's vertices form a lattice basis).
bool is_smooth(const Polytope& p);

// The dual basis u_F^v of a simplex facet, aligned with its vertex_indices.
// DomainError when the facet is not a simplex with an invertible vertex
// matrix.
const std::vector<RatCovector>& dual_basis(const Polytope& p, int facet);

// The facet sharing the ridge opposite vertex_index, and the one vertex of
// that facet off the ridge.
struct NeighborResult {
  int facet = -1;   // index into p.facets()
  int vertex = -1;  // index into p.vertices()
};
NeighborResult neighbor(const Polytope& p, int facet, int vertex_index);

// Checks <u_F', x> == <u_F, x> + (<u_F', v> - 1) <u_F^v, x> exactly, where F'
// is the neighboring facet of F opposite v.
bool check_uf_relation(const Polytope& p, int facet, int vertex_index, const IntVector& x);

// Checks <u_F, x> - 1 <= <u_F^v, x> for every facet vertex v and every vertex
// x of p, with every equality case incident to the neighboring facet N(F,v).
bool check_coef_bound(const Polytope& p, int facet);

// Histogram of <u_F, v> over the vertices of p; only nonzero counts stored,
// keys descending from 1. DomainError when a pairing value is not integral.
struct LevelDistribution {
  int facet = -1;
  std::map<long long, int, std::greater<long long>> counts;
  int count_at(long long level) const;
  long long weighted_sum() const;  // sum of level * count
};
LevelDistribution levels(const Polytope& p, int facet);

// Facets F with <u_F^w, vertex_sum> >= 0 for every w in V(F): the vertex sum
// is a non-negative combination of the facet's vertices. Requires p
// simplicial with the origin interior; never empty for such input.
std::vector<int> special_facets(const Polytope& p);
bool is_special_facet(const Polytope& p, int facet);

// The three admissible level distributions of a special facet when p is
// terminal simplicial reflexive with 3d-1 vertices.
enum class CaseTag { Case1, Case2, Case3 };
const char* to_string(CaseTag tag);
CaseTag case_of(const Polytope& p, int facet);

// Every vertex at level 0 must be the neighboring vertex opposite each facet
// vertex where its coefficient is negative, and there are at most d of them.
bool h0_neighbors_check(const Polytope& p, int facet);

// When exactly d vertices sit at level 0 they must be { -y + z_y : y in V(F) }
// with z_y a facet vertex distinct from y; returns the map as vertex indices
// (y -> z_y). Returns nullopt when fewer than d vertices sit at level 0.
// ContradictionError when the count is d but the structure fails -- impossible
// for terminal simplicial reflexive input, so reaching it means a hypothesis
// (usually terminality) was violated.
std::optional<std::map<int, int>> h0_structure(const Polytope& p, int facet);

// With d vertices at level 0, every vertex at level -1 is the negation of a
// facet vertex. DomainError when fewer than d vertices sit at level 0.
bool hminus1_antipodal_check(const Polytope& p, int facet);

// No vertex at level -1 may have coefficient -1 on both v1 and v2 when their
// neighboring vertices are distinct level-0 vertices with coefficient -1.
// DomainError when those preconditions fail.
bool exclusion_check(const Polytope& p, int facet, int v1_index, int v2_index);

// |det A_F|: the (d-1)!-scaled simplex volume over the origin, kept integral.
Int normalized_volume(const Polytope& p, int facet);

// Runs every lemma check that applies to p (hypotheses are gated per check)
// and reports violations with witnesses. Requires p simplicial with the
// origin strictly interior.
struct LemmaViolation {
  std::string check;
  std::string witness;
};
struct LemmaReport {
  std::vector<LemmaViolation> violations;
  long long checks = 0;
  bool ok() const { return violations.empty(); }
};
LemmaReport run_lemma_suite(const Polytope& p);

}  // namespace latfan

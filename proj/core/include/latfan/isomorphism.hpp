#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "latfan/polytope.hpp"

namespace latfan {

// Basis-independent invariant bundle. Equal for isomorphic polytopes; the
// converse is never assumed. DomainError unless the polytope is simplicial
// reflexive (the pairing matrix must be integral and the facet volumes need
// simplex facets).
struct Fingerprint {
  int dim = 0;
  int vertex_count = 0;
  long long lattice_point_count = 0;
  std::vector<long long> facet_volumes;                // sorted
  std::vector<std::vector<long long>> pairing_rows;    // per facet, each sorted; rows sorted
  std::vector<std::vector<long long>> pairing_cols;    // per vertex, each sorted; cols sorted

  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Polytope& p);

// A unimodular T (acting on row vectors, x -> x T) with V(p) T = V(q) as
// sets, or nullopt. The search anchors one facet of p against every
// compatible ordered facet-vertex tuple of q, so it has no false negatives.
// UnsupportedError unless both polytopes are simplicial with the origin
// strictly interior.
std::optional<IntMatrix> isomorphism_witness(const Polytope& p, const Polytope& q);

bool are_isomorphic(const Polytope& p, const Polytope& q);

// One representative per isomorphism class. Polytopes are grouped by
// fingerprint and compared pairwise within groups; the output is ordered by
// (fingerprint, lexicographically smallest row-sorted vertex matrix) and each
// representative carries that row-sorted vertex order.
std::vector<Polytope> dedupe(const std::vector<Polytope>& ps);

}  // namespace latfan

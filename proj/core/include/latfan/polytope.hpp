#pragma once

#include <vector>

#include "latfan/linalg.hpp"

namespace latfan {

// One facet of a full-dimensional lattice polytope. The supporting hyperplane
// is <normal, x> = offset with a primitive integral normal, and
// <normal, x> <= offset holds over the whole polytope. When the origin is
// strictly interior every offset is >= 1 and u() = normal/offset is the
// functional taking value 1 on the facet.
struct Facet {
  std::vector<int> vertex_indices;  // sorted indices into Polytope::vertices()
  IntVector normal;
  Int offset;
  // Basis of M_R dual to the facet's vertex basis, aligned with
  // vertex_indices. Present only when the facet is a simplex whose hyperplane
  // misses the origin.
  std::vector<RatCovector> dual_basis;

  bool is_simplex(int dim) const { return static_cast<int>(vertex_indices.size()) == dim; }
  bool has_dual_basis() const { return !dual_basis.empty(); }
  RatCovector u() const;  // DomainError when offset <= 0
};

// Full-dimensional lattice polytope given by its vertex list, with the facet
// structure computed eagerly at construction. Instances are immutable; every
// operation is a pure function, safe for concurrent reads.
class Polytope {
 public:
  // Strict constructor: points must be pairwise distinct and each must be a
  // vertex of the hull. ValidationError otherwise; DimensionalityError when
  // the points do not affinely span dimension dim.
  static Polytope make(int dim, std::vector<IntVector> points);
  // Lenient constructor: reduces the input to the extreme points.
  static Polytope hull(int dim, std::vector<IntVector> points);

  int dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const IntVector& vertex(int i) const { return vertices_[i]; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(int i) const { return facets_[i]; }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  bool origin_interior() const;
  bool contains(const IntVector& x) const;
  // All lattice points of the polytope, lexicographically sorted. Scans the
  // coordinate bounding box of the vertices; O(box volume).
  std::vector<IntVector> lattice_points() const;
  IntVector vertex_sum() const;
  // Facet normals as vertices of the dual polytope. DomainError unless the
  // origin is strictly interior.
  std::vector<RatCovector> dual_vertices() const;

  // Index of the facet with the given primitive normal and offset, -1 if
  // absent. Facets are deduplicated by this key, so the match is unique.
  int find_facet(const IntVector& normal, Int offset) const;

 private:
  Polytope() = default;
  static Polytope build(int dim, std::vector<IntVector> points, bool strict);

  int dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
};

// A supporting hyperplane of conv(points) together with every input point
// lying on it (index order ascending). The input need not consist of extreme
// points.
struct RawFacet {
  IntVector normal;  // primitive integral
  Int offset;
  std::vector<int> incident;
};

// All facets of conv(points) by ridge pivoting (gift wrapping) from an
// initial facet, in exact arithmetic. Points must be pairwise distinct and
// affinely span dimension dim.
std::vector<RawFacet> wrap_facets(int dim, const std::vector<IntVector>& points);

// The dual of a reflexive polytope as a lattice polytope (its vertices are
// the facet normals). DomainError unless every facet offset is 1.
Polytope polar_dual(const Polytope& p);

}  // namespace latfan

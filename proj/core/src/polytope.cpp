#include "latfan/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace latfan {

RatCovector Facet::u() const {
  if (offset <= Int(0)) throw DomainError("Facet::u: origin is not strictly inside this facet's halfspace");
  RatCovector r(normal.size());
  for (size_t i = 0; i < normal.size(); ++i) r[i] = Rational(normal[i], offset);
  return r;
}

namespace {

std::vector<long long> plane_key(const IntVector& normal, Int offset) {
  std::vector<long long> k;
  k.reserve(normal.size() + 1);
  for (Int x : normal) k.push_back(x.value());
  k.push_back(offset.value());
  return k;
}

std::vector<int> contact_set(const std::vector<IntVector>& pts, const IntVector& a, Int b) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (dot(a, pts[i]) == b) s.push_back(i);
  }
  return s;
}

bool parallel(const IntVector& u, const IntVector& v) {
  for (size_t i = 0; i < u.size(); ++i) {
    for (size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

// Kernel of the row space spanned by dirs, with the ambient dimension made
// explicit so an empty direction set yields the full standard basis.
std::vector<IntVector> kernel_with_dim(const std::vector<IntVector>& dirs, int dim) {
  if (dirs.empty()) {
    std::vector<IntVector> basis;
    for (int i = 0; i < dim; ++i) {
      IntVector e(dim, Int(0));
      e[i] = Int(1);
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(IntMatrix(dirs));
}

// Generalized cross product of dim-1 row vectors: component k is the signed
// minor with column k deleted. Orthogonal to every input row.
IntVector cross_orthogonal(const std::vector<IntVector>& rows, int dim) {
  IntVector c(dim, Int(0));
  std::vector<IntVector> minor(dim - 1, IntVector(dim - 1));
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < dim - 1; ++i) {
      for (int j = 0, mc = 0; j < dim; ++j) {
        if (j == k) continue;
        minor[i][mc++] = rows[i][j];
      }
    }
    Int m = det(IntMatrix(minor));
    c[k] = (k % 2 == 0) ? m : -m;
  }
  return c;
}

void primitivize_plane(IntVector& a, Int& b) {
  Int g = 0;
  for (Int x : a) g = gcd(g, x);
  if (g > Int(1)) {
    for (Int& x : a) x = exact_div(x, g);
    b = exact_div(b, g);
  }
}

// Rotates the supporting hyperplane <a, x> = b around the affine hull of the
// current contact set until it first touches a new point; repeats until the
// contact set spans a facet. Standard initial-facet construction for gift
// wrapping, done in exact integer arithmetic.
std::pair<IntVector, Int> initial_facet(int dim, const std::vector<IntVector>& pts) {
  IntVector a(dim, Int(0));
  a[0] = Int(1);
  Int b = dot(a, pts[0]);
  for (const auto& p : pts) b = std::max(b, dot(a, p));

  for (;;) {
    std::vector<int> s = contact_set(pts, a, b);
    std::vector<IntVector> dirs;
    for (size_t i = 1; i < s.size(); ++i) dirs.push_back(sub(pts[s[i]], pts[s[0]]));
    int r = dirs.empty() ? 0 : rank(IntMatrix(dirs));
    if (r == dim - 1) return {a, b};

    std::vector<IntVector> kernel = kernel_with_dim(dirs, dim);
    IntVector c;
    for (const auto& k : kernel) {
      if (!parallel(k, a)) {
        c = k;
        break;
      }
    }
    if (c.empty()) throw ContradictionError("initial_facet: no rotation direction");
    Int c0 = dot(c, pts[s[0]]);

    bool has_pos = false, has_neg = false;
    for (const auto& p : pts) {
      int sg = sgn(dot(c, p) - c0);
      has_pos = has_pos || sg > 0;
      has_neg = has_neg || sg < 0;
    }
    if (!has_pos && !has_neg) throw ContradictionError("initial_facet: degenerate point set");
    if (!has_pos) {
      c = negate(c);
      c0 = -c0;
    }

    // Smallest t >= 0 with some new point on <a + t c, x> = b + t c0.
    Int tn = 0, td = 0;  // td == 0 marks "not found yet"
    for (const auto& p : pts) {
      Int g = dot(c, p) - c0;
      if (g <= Int(0)) continue;
      Int u = b - dot(a, p);
      if (td == Int(0) || u * td < tn * g) {
        Int d = gcd(u, g);
        tn = exact_div(u, d);
        td = exact_div(g, d);
      }
    }
    if (td == Int(0)) throw ContradictionError("initial_facet: rotation found no contact");
    IntVector na(dim);
    for (int i = 0; i < dim; ++i) na[i] = td * a[i] + tn * c[i];
    Int nb = td * b + tn * c0;
    primitivize_plane(na, nb);
    a = std::move(na);
    b = nb;
  }
}

// The facet adjacent to (a, b) across the ridge on which c vanishes, with c
// oriented negative on the rest of the current facet. In the pencil
// lambda a + mu c the adjacent facet corresponds to the point x* maximizing
// g(x)/u(x) over the points strictly off the facet (u(x) = b - <a,x> > 0,
// g(x) = <c,x> - c0); its normal is g* a + u* c, which may well have a
// negative coefficient on a.
RawFacet pivot_across(const std::vector<IntVector>& pts, const IntVector& a, Int b,
                      const IntVector& c, Int c0) {
  Int gn = 0, un = 0;
  bool found = false;
  for (const auto& p : pts) {
    Int u = b - dot(a, p);
    if (u <= Int(0)) continue;  // on the current facet's hyperplane
    Int g = dot(c, p) - c0;
    if (!found || g * un > gn * u) {
      found = true;
      Int d = gcd(g, u);
      gn = exact_div(g, d);
      un = exact_div(u, d);
    }
  }
  if (!found) throw ContradictionError("pivot_across: ridge has no second facet");
  const int dim = static_cast<int>(a.size());
  IntVector na(dim);
  for (int i = 0; i < dim; ++i) na[i] = gn * a[i] + un * c[i];
  Int nb = gn * b + un * c0;
  primitivize_plane(na, nb);
  RawFacet f;
  f.incident = contact_set(pts, na, nb);
  f.normal = std::move(na);
  f.offset = nb;
  return f;
}

// Integer coordinates of the points of a facet inside its own hyperplane,
// with respect to a basis of the lattice the facet directions generate.
std::vector<IntVector> project_to_plane(const std::vector<IntVector>& pts,
                                        const std::vector<int>& face, int dim) {
  const IntVector& origin = pts[face[0]];
  std::vector<IntVector> dirs;
  for (size_t i = 1; i < face.size(); ++i) dirs.push_back(sub(pts[face[i]], origin));
  HnfResult h = hnf(IntMatrix(dirs));
  std::vector<IntVector> basis;
  for (const auto& row : h.h.rows()) {
    if (!is_zero_vector(row)) basis.push_back(row);
  }
  if (static_cast<int>(basis.size()) != dim - 1) {
    throw ContradictionError("project_to_plane: face does not span a hyperplane");
  }

  // Independent columns of the basis give a square system for coordinates.
  std::vector<int> cols;
  {
    std::vector<IntVector> bt(dim, IntVector(dim - 1));
    for (int i = 0; i < dim - 1; ++i) {
      for (int j = 0; j < dim; ++j) bt[j][i] = basis[i][j];
    }
    // Pick dim-1 rows of bt (columns of basis) of full rank, greedily.
    std::vector<IntVector> chosen;
    for (int j = 0; j < dim && static_cast<int>(cols.size()) < dim - 1; ++j) {
      chosen.push_back(bt[j]);
      if (rank(IntMatrix(chosen)) == static_cast<int>(chosen.size())) {
        cols.push_back(j);
      } else {
        chosen.pop_back();
      }
    }
  }
  std::vector<IntVector> sys;  // sys.row(i) = basis column cols[i]
  for (int c : cols) {
    IntVector col(dim - 1);
    for (int i = 0; i < dim - 1; ++i) col[i] = basis[i][c];
    sys.push_back(std::move(col));
  }
  IntMatrix sys_m(sys);

  std::vector<IntVector> coords;
  for (int idx : face) {
    IntVector t = sub(pts[idx], origin);
    IntVector rhs(dim - 1);
    for (int i = 0; i < dim - 1; ++i) rhs[i] = t[cols[i]];
    RatCovector y = solve_unique(sys_m, rhs);
    IntVector yi(dim - 1);
    for (int i = 0; i < dim - 1; ++i) yi[i] = y[i].to_int();
    // The coordinates must reproduce the point on every column.
    for (int j = 0; j < dim; ++j) {
      Int s = 0;
      for (int i = 0; i < dim - 1; ++i) s += yi[i] * basis[i][j];
      if (s != t[j]) throw ContradictionError("project_to_plane: point outside face lattice");
    }
    coords.push_back(std::move(yi));
  }
  return coords;
}

// Ridges of a facet, as sets of point indices. A simplex facet loses one
// vertex at a time; otherwise the facet is itself hull-enumerated one
// dimension down.
std::vector<std::vector<int>> facet_ridges(const std::vector<IntVector>& pts,
                                           const std::vector<int>& face, int dim) {
  if (static_cast<int>(face.size()) == dim) {
    std::vector<std::vector<int>> ridges;
    for (size_t drop = 0; drop < face.size(); ++drop) {
      std::vector<int> r;
      for (size_t i = 0; i < face.size(); ++i) {
        if (i != drop) r.push_back(face[i]);
      }
      ridges.push_back(std::move(r));
    }
    return ridges;
  }
  std::vector<IntVector> coords = project_to_plane(pts, face, dim);
  std::vector<RawFacet> sub = wrap_facets(dim - 1, coords);
  std::vector<std::vector<int>> ridges;
  for (const auto& sf : sub) {
    std::vector<int> r;
    for (int i : sf.incident) r.push_back(face[i]);
    ridges.push_back(std::move(r));
  }
  return ridges;
}

}  // namespace

std::vector<RawFacet> wrap_facets(int dim, const std::vector<IntVector>& points) {
  if (dim == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(points.size()); ++i) {
      if (points[i][0] < points[lo][0]) lo = i;
      if (points[i][0] > points[hi][0]) hi = i;
    }
    RawFacet top{{Int(1)}, points[hi][0], {hi}};
    RawFacet bot{{Int(-1)}, -points[lo][0], {lo}};
    return {top, bot};
  }

  auto [a0, b0] = initial_facet(dim, points);
  RawFacet first;
  first.normal = a0;
  first.offset = b0;
  first.incident = contact_set(points, a0, b0);

  std::set<std::vector<long long>> seen;
  seen.insert(plane_key(first.normal, first.offset));
  std::deque<RawFacet> queue{first};
  std::vector<RawFacet> out;

  while (!queue.empty()) {
    RawFacet f = std::move(queue.front());
    queue.pop_front();

    // Rotation direction per ridge: for a simplex facet off the origin the
    // ridge vertices are linearly independent, so the generalized cross
    // product of them vanishes on the ridge and works integer-only; a kernel
    // vector handles the general case.
    std::vector<std::vector<int>> ridges = facet_ridges(points, f.incident, dim);
    const bool simplex = static_cast<int>(f.incident.size()) == dim && f.offset != Int(0);

    for (size_t r = 0; r < ridges.size(); ++r) {
      const std::vector<int>& ridge = ridges[r];
      IntVector c;
      Int c0 = 0;
      if (simplex) {
        std::vector<IntVector> rows;
        for (int i : ridge) rows.push_back(points[i]);
        c = cross_orthogonal(rows, dim);
        // <c, x> = 0 on the ridge; orient negative on the dropped vertex.
        Int g = dot(c, points[f.incident[r]]);
        if (g == Int(0)) throw ContradictionError("wrap_facets: degenerate simplex facet");
        if (g > Int(0)) c = negate(c);
        c0 = Int(0);
      } else {
        std::vector<IntVector> dirs;
        for (size_t i = 1; i < ridge.size(); ++i) {
          dirs.push_back(sub(points[ridge[i]], points[ridge[0]]));
        }
        std::vector<IntVector> kernel = kernel_with_dim(dirs, dim);
        for (const auto& k : kernel) {
          if (!parallel(k, f.normal)) {
            c = k;
            break;
          }
        }
        if (c.empty()) throw ContradictionError("wrap_facets: no pivot direction");
        c0 = dot(c, points[ridge[0]]);
        // Orient c away from the facet's off-ridge points.
        std::set<int> in_ridge(ridge.begin(), ridge.end());
        for (int i : f.incident) {
          if (in_ridge.count(i)) continue;
          int sg = sgn(dot(c, points[i]) - c0);
          if (sg == 0) throw ContradictionError("wrap_facets: ridge is not a face");
          if (sg > 0) {
            c = negate(c);
            c0 = -c0;
          }
          break;
        }
      }
      RawFacet next = pivot_across(points, f.normal, f.offset, c, c0);
      if (seen.insert(plane_key(next.normal, next.offset)).second) {
        queue.push_back(std::move(next));
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

Polytope Polytope::build(int dim, std::vector<IntVector> points, bool strict) {
  if (dim < 1) throw DimensionError("Polytope: dimension must be >= 1");
  if (points.empty()) throw DomainError("Polytope: empty point list");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw DimensionError("Polytope: point length != dim");
  }

  // Duplicates: rejected in strict mode, merged (keeping first occurrence)
  // otherwise.
  {
    std::set<std::vector<long long>> seen;
    std::vector<IntVector> unique;
    for (auto& p : points) {
      std::vector<long long> k;
      for (Int x : p) k.push_back(x.value());
      if (!seen.insert(k).second) {
        if (strict) throw ValidationError("Polytope: duplicate point " + to_string(p));
        continue;
      }
      unique.push_back(std::move(p));
    }
    points = std::move(unique);
  }

  {
    std::vector<IntVector> dirs;
    for (size_t i = 1; i < points.size(); ++i) dirs.push_back(sub(points[i], points[0]));
    int r = dirs.empty() ? 0 : rank(IntMatrix(dirs));
    if (r != dim) throw DimensionalityError("Polytope: points do not affinely span dimension " + std::to_string(dim));
  }

  std::vector<RawFacet> raw = wrap_facets(dim, points);

  // A point is extreme iff its incident facet normals span the whole space.
  std::vector<std::vector<IntVector>> incident_normals(points.size());
  for (const auto& f : raw) {
    for (int i : f.incident) incident_normals[i].push_back(f.normal);
  }
  std::vector<bool> extreme(points.size(), false);
  for (size_t i = 0; i < points.size(); ++i) {
    if (!incident_normals[i].empty() && rank(IntMatrix(incident_normals[i])) == dim) {
      extreme[i] = true;
    }
  }

  std::vector<int> new_index(points.size(), -1);
  std::vector<IntVector> vertices;
  for (size_t i = 0; i < points.size(); ++i) {
    if (extreme[i]) {
      new_index[i] = static_cast<int>(vertices.size());
      vertices.push_back(points[i]);
    } else if (strict) {
      throw ValidationError("Polytope: point " + to_string(points[i]) + " is not a vertex of the hull");
    }
  }

  std::vector<Facet> facets;
  for (auto& f : raw) {
    Facet out;
    out.normal = std::move(f.normal);
    out.offset = f.offset;
    for (int i : f.incident) {
      if (new_index[i] >= 0) out.vertex_indices.push_back(new_index[i]);
    }
    std::sort(out.vertex_indices.begin(), out.vertex_indices.end());
    facets.push_back(std::move(out));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) {
    return std::pair(x.normal, x.offset) < std::pair(y.normal, y.offset);
  });

  for (auto& f : facets) {
    if (static_cast<int>(f.vertex_indices.size()) == dim && f.offset != Int(0)) {
      std::vector<IntVector> rows;
      for (int i : f.vertex_indices) rows.push_back(vertices[i]);
      f.dual_basis = dual_covectors(IntMatrix(rows));
    }
  }

  Polytope p;
  p.dim_ = dim;
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  return p;
}

Polytope Polytope::make(int dim, std::vector<IntVector> points) {
  return build(dim, std::move(points), /*strict=*/true);
}

Polytope Polytope::hull(int dim, std::vector<IntVector> points) {
  return build(dim, std::move(points), /*strict=*/false);
}

bool Polytope::origin_interior() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [](const Facet& f) { return f.offset >= Int(1); });
}

bool Polytope::contains(const IntVector& x) const {
  if (static_cast<int>(x.size()) != dim_) throw DimensionError("contains: point length != dim");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, x) <= f.offset; });
}

std::vector<IntVector> Polytope::lattice_points() const {
  IntVector lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_) {
    for (int k = 0; k < dim_; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  }
  std::vector<IntVector> out;
  IntVector cur = lo;
  for (;;) {
    if (contains(cur)) out.push_back(cur);
    int k = dim_ - 1;
    while (k >= 0 && cur[k] == hi[k]) {
      cur[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    cur[k] += Int(1);
  }
  return out;
}

IntVector Polytope::vertex_sum() const {
  IntVector s(dim_, Int(0));
  for (const auto& v : vertices_) s = add(s, v);
  return s;
}

std::vector<RatCovector> Polytope::dual_vertices() const {
  if (!origin_interior()) throw DomainError("dual_vertices: origin is not strictly interior");
  std::vector<RatCovector> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(f.u());
  return out;
}

int Polytope::find_facet(const IntVector& normal, Int offset) const {
  for (int i = 0; i < facet_count(); ++i) {
    if (facets_[i].offset == offset && facets_[i].normal == normal) return i;
  }
  return -1;
}

Polytope polar_dual(const Polytope& p) {
  std::vector<IntVector> duals;
  for (const auto& f : p.facets()) {
    if (f.offset != Int(1)) throw DomainError("polar_dual: polytope is not reflexive");
    duals.push_back(f.normal);
  }
  return Polytope::make(p.dim(), std::move(duals));
}

}  // namespace latfan

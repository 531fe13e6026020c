#include <random>

#include "doctest.h"
#include "latfan/families.hpp"
#include "latfan/isomorphism.hpp"
#include "latfan/predicates.hpp"
#include "oracles.hpp"

using namespace latfan;

namespace {

IntMatrix mat(std::vector<std::vector<long long>> rows) {
  std::vector<IntVector> r;
  for (auto& row : rows) {
    IntVector v;
    for (long long x : row) v.push_back(Int(x));
    r.push_back(std::move(v));
  }
  return IntMatrix(std::move(r));
}

}  // namespace

TEST_CASE("fingerprint basics") {
  Polytope sq = make_family(FamilyId::Cross, 2);
  Fingerprint fp = fingerprint(sq);
  CHECK(fp.vertex_count == 4);
  CHECK(fp.lattice_point_count == 5);

  CHECK(fingerprint(make_family(FamilyId::P2, 3)) != fingerprint(make_family(FamilyId::P3, 3)));

  // Not reflexive: scaled square.
  Polytope scaled = Polytope::make(
      2, {IntVector{Int(2), Int(0)}, IntVector{Int(-2), Int(0)}, IntVector{Int(0), Int(2)},
          IntVector{Int(0), Int(-2)}});
  CHECK_THROWS_AS(fingerprint(scaled), DomainError);
}

TEST_CASE("fingerprint is invariant under unimodular maps") {
  std::mt19937_64 rng(4242);
  for (const Polytope& p : test::corpus(4)) {
    if (!is_reflexive(p) || !is_simplicial(p)) continue;
    Fingerprint fp = fingerprint(p);
    for (int rep = 0; rep < 3; ++rep) {
      IntMatrix t = test::random_unimodular(rng, p.dim());
      CHECK(fingerprint(test::apply_map(p, t)) == fp);
    }
  }
}

TEST_CASE("are_isomorphic on explicit witnesses") {
  Polytope p1 = make_family(FamilyId::P1, 2);
  Polytope image = test::apply_map(p1, mat({{1, 1}, {0, -1}}));
  CHECK(are_isomorphic(p1, image));

  auto witness = isomorphism_witness(p1, image);
  REQUIRE(witness.has_value());
  CHECK(abs(det(*witness)) == Int(1));
  // The witness maps the vertex set onto the vertex set.
  std::vector<IntVector> mapped;
  for (const auto& v : p1.vertices()) mapped.push_back(test::apply_map(v, *witness));
  std::vector<IntVector> target = image.vertices();
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  CHECK(mapped == target);
}

TEST_CASE("p2(3) and p3(3) are not isomorphic") {
  CHECK_FALSE(are_isomorphic(make_family(FamilyId::P2, 3), make_family(FamilyId::P3, 3)));
}

TEST_CASE("negated, permuted copy is isomorphic") {
  Polytope p3 = make_family(FamilyId::P3, 3);
  IntMatrix neg_perm = mat({{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}});
  CHECK(are_isomorphic(p3, test::apply_map(p3, neg_perm)));
}

TEST_CASE("vertex-count mismatch is not isomorphic") {
  CHECK_FALSE(are_isomorphic(make_family(FamilyId::Cross, 2), make_family(FamilyId::P1, 2)));
}

TEST_CASE("non-simplicial input is unsupported") {
  std::vector<IntVector> cube;
  for (int mask = 0; mask < 8; ++mask) {
    IntVector v(3);
    for (int k = 0; k < 3; ++k) v[k] = Int((mask >> k) & 1 ? 1 : -1);
    cube.push_back(std::move(v));
  }
  Polytope c = Polytope::make(3, cube);
  CHECK_THROWS_AS(are_isomorphic(c, c), UnsupportedError);
}

TEST_CASE("are_isomorphic is reflexive, symmetric, and unimodular-invariant") {
  std::mt19937_64 rng(777);
  std::vector<Polytope> polys;
  polys.push_back(make_family(FamilyId::P1, 2));
  polys.push_back(make_family(FamilyId::P2, 3));
  polys.push_back(make_family(FamilyId::P3, 3));
  polys.push_back(make_family(FamilyId::DelPezzo2, 2));
  for (const Polytope& p : polys) {
    CHECK(are_isomorphic(p, p));
    IntMatrix t = test::random_unimodular(rng, p.dim());
    Polytope q = test::apply_map(p, t);
    CHECK(are_isomorphic(p, q));
    CHECK(are_isomorphic(q, p));
  }
  CHECK_FALSE(are_isomorphic(test::apply_map(polys[1], test::random_unimodular(rng, 3)),
                             test::apply_map(polys[2], test::random_unimodular(rng, 3))));
}

TEST_CASE("dedupe") {
  std::mt19937_64 rng(1);
  Polytope p1 = make_family(FamilyId::P1, 2);
  CHECK(dedupe({p1, test::apply_map(p1, test::random_unimodular(rng, 2))}).size() == 1);

  Polytope p2 = make_family(FamilyId::P2, 3);
  Polytope p3 = make_family(FamilyId::P3, 3);
  CHECK(dedupe({p2, p3}).size() == 2);
  CHECK(dedupe({}).empty());

  // Output is invariant under duplication and permutation of the input.
  Polytope p3_image = test::apply_map(p3, test::random_unimodular(rng, 3));
  std::vector<Polytope> a = {p2, p3, p2, p3_image};
  std::vector<Polytope> b = {p3_image, p3, p2};
  std::vector<Polytope> da = dedupe(a), db = dedupe(b);
  REQUIRE(da.size() == 2);
  REQUIRE(db.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(da[i].vertices() == db[i].vertices());
  }
}

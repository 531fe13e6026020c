#include <algorithm>

#include "doctest.h"
#include "latfan/families.hpp"
#include "latfan/predicates.hpp"
#include "oracles.hpp"

using namespace latfan;

namespace {

IntVector vec(std::vector<long long> xs) {
  IntVector v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

IntVector e1(int d) {
  IntVector v(d, Int(0));
  v[0] = Int(1);
  return v;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(family_from_name("p1") == FamilyId::P1);
  CHECK(family_from_name("dp2") == FamilyId::DelPezzo2);
  CHECK(family_from_name("fig2") == FamilyId::Figure2);
  CHECK_FALSE(family_from_name("nope").has_value());
  CHECK(family_fixed_dim(FamilyId::Figure2) == 2);
  CHECK(family_fixed_dim(FamilyId::P1) == 0);
}

TEST_CASE("explicit vertex lists at small dimension") {
  CHECK(family_vertices(FamilyId::P1, 2) ==
        std::vector<IntVector>{vec({1, 0}), vec({0, 1}), vec({0, -1}), vec({1, -1}), vec({-1, 1})});
  CHECK(family_vertices(FamilyId::P2, 3) ==
        std::vector<IntVector>{vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}), vec({0, -1, 0}),
                               vec({0, 0, 1}), vec({1, -1, 0}), vec({-1, 1, 0}), vec({1, 0, -1})});
  CHECK(family_vertices(FamilyId::P3, 3) ==
        std::vector<IntVector>{vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}), vec({0, -1, 0}),
                               vec({0, 0, 1}), vec({0, 0, -1}), vec({0, 1, -1}), vec({0, -1, 1})});
  CHECK(make_family(FamilyId::DelPezzo2, 2).vertex_count() == 6);
}

TEST_CASE("parity violations") {
  CHECK_THROWS_AS(make_family(FamilyId::P1, 3), DomainError);
  CHECK_THROWS_AS(make_family(FamilyId::P2, 4), DomainError);
  CHECK_THROWS_AS(make_family(FamilyId::P3, 2), DomainError);
  CHECK_THROWS_AS(make_family(FamilyId::DelPezzo2, 3), DomainError);
  CHECK_THROWS_AS(make_family(FamilyId::Figure2, 3), DomainError);
}

TEST_CASE("family polytopes are smooth with the advertised counts (d <= 7)") {
  for (int d = 2; d <= 7; d += 2) {
    Polytope p = make_family(FamilyId::P1, d);
    CHECK(p.vertex_count() == 3 * d - 1);
    CHECK(is_smooth(p));
    CHECK(is_terminal(p));
    CHECK(p.vertex_sum() == e1(d));
  }
  for (int d = 3; d <= 7; d += 2) {
    Polytope p2 = make_family(FamilyId::P2, d);
    CHECK(p2.vertex_count() == 3 * d - 1);
    CHECK(is_smooth(p2));
    CHECK(p2.vertex_sum() == e1(d));

    Polytope p3 = make_family(FamilyId::P3, d);
    CHECK(p3.vertex_count() == 3 * d - 1);
    CHECK(is_smooth(p3));
    CHECK(p3.vertex_sum() == IntVector(d, Int(0)));
  }
  CHECK(is_smooth(make_family(FamilyId::DelPezzo2, 2)));
  for (int d = 1; d <= 5; ++d) CHECK(is_smooth(make_family(FamilyId::Cross, d)));
}

TEST_CASE("figure-2 pentagon is reflexive and simplicial but not terminal") {
  Polytope p = make_family(FamilyId::Figure2, 2);
  CHECK(is_reflexive(p));
  CHECK(is_simplicial(p));
  CHECK_FALSE(is_terminal(p));
}

TEST_CASE("p3 is centrally symmetric") {
  for (int d = 3; d <= 7; d += 2) {
    Polytope p = make_family(FamilyId::P3, d);
    std::vector<IntVector> vs = p.vertices();
    std::sort(vs.begin(), vs.end());
    for (const auto& v : p.vertices()) {
      CHECK(std::binary_search(vs.begin(), vs.end(), negate(v)));
    }
  }
}

TEST_CASE("p3 at d=5: case-3 shape on every facet") {
  // The difference-pair reading of the vertex list is cross-checked by the
  // level structure: every facet is special with the column {1:d, 0:d-1, -1:d}.
  Polytope p = make_family(FamilyId::P3, 5);
  CHECK(static_cast<int>(special_facets(p).size()) == p.facet_count());
  for (int f = 0; f < p.facet_count(); ++f) {
    CHECK(case_of(p, f) == CaseTag::Case3);
  }
}

TEST_CASE("p2 at d=5: case-1 shape on the basis facet") {
  Polytope p = make_family(FamilyId::P2, 5);
  int f = p.find_facet(IntVector(5, Int(1)), Int(1));
  REQUIRE(f >= 0);
  CHECK(case_of(p, f) == CaseTag::Case1);
}

TEST_CASE("direct sums") {
  Polytope v2 = make_family(FamilyId::DelPezzo2, 2);
  Polytope sum = direct_sum(v2, v2);
  CHECK(sum.dim() == 4);
  CHECK(sum.vertex_count() == 12);  // 3d vertices: the extremal case
  CHECK(is_simplicial(sum));
  CHECK(is_reflexive(sum));

  Polytope sq = make_family(FamilyId::Cross, 2);
  Polytope sq2 = direct_sum(sq, sq);
  CHECK(sq2.dim() == 4);
  CHECK(sq2.vertex_count() == 8);
  CHECK(is_reflexive(sq2));

  Polytope mixed = direct_sum(v2, make_family(FamilyId::Cross, 1));
  CHECK(mixed.dim() == 3);
  CHECK(mixed.vertex_count() == 8);
  CHECK(is_reflexive(mixed));
  CHECK(is_simplicial(mixed));

  Polytope shifted = Polytope::make(1, {IntVector{Int(1)}, IntVector{Int(3)}});
  CHECK_THROWS_AS(direct_sum(v2, shifted), DomainError);
}

TEST_CASE("p1 decomposes as pentagon plus hexagons") {
  // d = 4: the 11 vertices split into the 5-gon on coordinates 1,2 and the
  // hexagon on coordinates 3,4.
  Polytope p = make_family(FamilyId::P1, 4);
  int in_pentagon = 0, in_hexagon = 0;
  for (const auto& v : p.vertices()) {
    bool first = v[0] != Int(0) || v[1] != Int(0);
    bool second = v[2] != Int(0) || v[3] != Int(0);
    CHECK(first != second);
    if (first) ++in_pentagon;
    if (second) ++in_hexagon;
  }
  CHECK(in_pentagon == 5);
  CHECK(in_hexagon == 6);
}

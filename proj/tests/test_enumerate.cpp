#include <algorithm>

#include "doctest.h"
#include "latfan/enumerate.hpp"
#include "latfan/families.hpp"
#include "latfan/isomorphism.hpp"
#include "oracles.hpp"

using namespace latfan;

namespace {

IntVector vec(std::vector<long long> xs) {
  IntVector v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

bool contains_vec(const std::vector<IntVector>& vs, const IntVector& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

SearchConfig config(int dim) {
  SearchConfig cfg;
  cfg.dim = dim;
  return cfg;
}

}  // namespace

TEST_CASE("candidate_vertices at level 0, d=3: the nine admissible vectors") {
  std::vector<IntVector> got = candidate_vertices(3, 0);
  std::vector<IntVector> expect = {
      vec({-1, -1, 2}), vec({-1, 0, 1}), vec({-1, 1, 0}), vec({-1, 2, -1}), vec({0, -1, 1}),
      vec({0, 1, -1}),  vec({1, -1, 0}), vec({1, 0, -1}), vec({2, -1, -1})};
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
}

TEST_CASE("candidate_vertices at level -1, d=2") {
  std::vector<IntVector> got = candidate_vertices(2, -1);
  std::vector<IntVector> expect = {vec({-2, 1}), vec({-1, 0}), vec({0, -1}), vec({1, -2})};
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
}

TEST_CASE("candidate_vertices at level -2 contain the -e_j-e_k shapes") {
  for (int d = 2; d <= 4; ++d) {
    std::vector<IntVector> got = candidate_vertices(d, -2);
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        IntVector v(d, Int(0));
        v[j] = Int(-1);
        v[k] = Int(-1);
        CHECK(contains_vec(got, v));
      }
    }
    // All primitive with the right coordinate range and sum.
    for (const auto& v : got) {
      CHECK(is_primitive(v));
      Int s = 0;
      for (Int x : v) {
        CHECK(x >= Int(-3));
        s += x;
      }
      CHECK(s == Int(-2));
    }
  }
  CHECK_THROWS_AS(candidate_vertices(3, 1), DomainError);
  CHECK_THROWS_AS(candidate_vertices(3, -3), DomainError);
}

TEST_CASE("enumeration at d=2 finds exactly the 5-gon") {
  ClassificationReport rep = enumerate_3dm1(config(2));
  REQUIRE(rep.representatives.size() == 1);
  CHECK(are_isomorphic(rep.representatives[0], make_family(FamilyId::P1, 2)));
  CHECK(is_smooth(rep.representatives[0]));
  CHECK(rep.cases.at(CaseTag::Case1).survivors > 0);
  CHECK(rep.cases.at(CaseTag::Case2).survivors == 0);
  CHECK(rep.cases.at(CaseTag::Case3).survivors == 0);
  REQUIRE(rep.family_matches.size() == 1);
  CHECK(rep.family_matches[0] == std::pair<std::string, int>{"p1", 0});
}

TEST_CASE("enumeration at d=3 finds exactly two classes") {
  ClassificationReport rep = enumerate_3dm1(config(3));
  REQUIRE(rep.representatives.size() == 2);
  CHECK(rep.cases.at(CaseTag::Case2).survivors == 0);

  Polytope p2 = make_family(FamilyId::P2, 3);
  Polytope p3 = make_family(FamilyId::P3, 3);
  int m2 = -1, m3 = -1;
  for (int i = 0; i < 2; ++i) {
    if (are_isomorphic(rep.representatives[i], p2)) m2 = i;
    if (are_isomorphic(rep.representatives[i], p3)) m3 = i;
    CHECK(is_smooth(rep.representatives[i]));
  }
  CHECK(m2 >= 0);
  CHECK(m3 >= 0);
  CHECK(m2 != m3);
}

TEST_CASE("the case-2 branch alone has no survivors") {
  SearchConfig cfg = config(3);
  cfg.cases = {CaseTag::Case2};
  ClassificationReport rep = enumerate_3dm1(cfg);
  CHECK(rep.cases.at(CaseTag::Case2).survivors == 0);
  CHECK(rep.representatives.empty());
  CHECK(rep.cases.size() == 1);
}

TEST_CASE("pruning does not change the classification (d = 2, 3)") {
  for (int d : {2, 3}) {
    SearchConfig off = config(d);
    off.prune = false;
    ClassificationReport a = enumerate_3dm1(config(d));
    ClassificationReport b = enumerate_3dm1(off);
    REQUIRE(a.representatives.size() == b.representatives.size());
    for (size_t i = 0; i < a.representatives.size(); ++i) {
      CHECK(a.representatives[i].vertices() == b.representatives[i].vertices());
    }
    // The unpruned search inspects at least as many candidates.
    for (const auto& [tag, stats] : a.cases) {
      CHECK(b.cases.at(tag).candidates >= stats.candidates);
    }
  }
}

TEST_CASE("survivor structure at d=3 reflects the case analysis") {
  ClassificationReport rep = enumerate_3dm1(config(3));
  for (const Polytope& p : rep.representatives) {
    IntVector nu = p.vertex_sum();
    if (is_zero_vector(nu)) {
      // Centrally symmetric survivor.
      std::vector<IntVector> vs = p.vertices();
      std::sort(vs.begin(), vs.end());
      for (const auto& v : p.vertices()) {
        CHECK(std::binary_search(vs.begin(), vs.end(), negate(v)));
      }
    } else {
      // Vertex sum is a vertex and, d being odd, so is its negative.
      CHECK(contains_vec(p.vertices(), nu));
      CHECK(contains_vec(p.vertices(), negate(nu)));
    }
    // Every special facet sits on one of the three admissible columns.
    for (int f : special_facets(p)) {
      CHECK_NOTHROW(case_of(p, f));
    }
  }
}

TEST_CASE("parallel search is deterministic") {
  SearchConfig seq = config(3);
  SearchConfig par = config(3);
  par.jobs = 8;
  ClassificationReport a = enumerate_3dm1(seq);
  ClassificationReport b = enumerate_3dm1(par);
  REQUIRE(a.representatives.size() == b.representatives.size());
  for (size_t i = 0; i < a.representatives.size(); ++i) {
    CHECK(a.representatives[i].vertices() == b.representatives[i].vertices());
  }
  for (const auto& [tag, stats] : a.cases) {
    CHECK(b.cases.at(tag).candidates == stats.candidates);
    CHECK(b.cases.at(tag).survivors == stats.survivors);
  }
}

TEST_CASE("capability and usage errors") {
  SearchConfig strict5 = config(5);
  strict5.strict = true;
  CHECK_THROWS_AS(enumerate_3dm1(strict5), CapabilityError);

  SearchConfig wrong = config(3);
  wrong.target_vertices = 7;
  CHECK_THROWS_AS(enumerate_3dm1(wrong), UnsupportedError);

  SearchConfig tiny = config(1);
  CHECK_THROWS_AS(enumerate_3dm1(tiny), DomainError);
}

TEST_CASE("verify_theorem at d=2 and d=3") {
  VerifyResult v2 = verify_theorem(2);
  CHECK(v2.pass);
  CHECK(v2.failures.empty());
  CHECK(v2.report.representatives.size() == 1);
  CHECK(v2.expected_families == std::vector<std::string>{"p1"});

  VerifyResult v3 = verify_theorem(3, 2);
  CHECK(v3.pass);
  CHECK(v3.report.representatives.size() == 2);
  CHECK(v3.expected_families == std::vector<std::string>{"p2", "p3"});
}

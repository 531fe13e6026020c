#include <sstream>

#include "doctest.h"
#include "latfan/io.hpp"
#include "oracles.hpp"

using namespace latfan;

namespace {

PolytopeData parse(const std::string& text) {
  std::istringstream is(text);
  return read_polytope(is);
}

}  // namespace

TEST_CASE("round-trip reproduces the identical vertex matrix") {
  for (const Polytope& p : test::corpus(5)) {
    PolytopeData data = parse(write_polytope(p));
    CHECK(data.dim == p.dim());
    CHECK(data.points == p.vertices());
  }
}

TEST_CASE("exact output format") {
  Polytope p = make_family(FamilyId::P1, 2);
  CHECK(write_polytope(p) == "2 5\n1 0\n0 1\n0 -1\n1 -1\n-1 1\n");
}

TEST_CASE("comments are ignored") {
  PolytopeData d = parse("# header comment\n2 3\n1 0\n# interior comment\n0 1\n-1 -1\n");
  CHECK(d.dim == 2);
  CHECK(d.points.size() == 3);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("2\n"), ParseError);
  CHECK_THROWS_AS(parse("2 2\n1 0\n0 1\n"), ParseError);        // n < d+1
  CHECK_THROWS_AS(parse("2 3\n1 0\n0 1\n"), ParseError);        // missing row
  CHECK_THROWS_AS(parse("2 3\n1 0\n0 1 5\n-1 -1\n"), ParseError);  // ragged row
  CHECK_THROWS_AS(parse("2 3\n1 0\n0 x\n-1 -1\n"), ParseError);
  CHECK_THROWS_AS(parse("2 3\n1 0\n0 1\n-1 -1\n0 0\n"), ParseError);  // trailing row
  CHECK_THROWS_AS(parse("0 3\n\n"), ParseError);
}

TEST_CASE("crlf input is accepted") {
  PolytopeData d = parse("2 3\r\n1 0\r\n0 1\r\n-1 -1\r\n");
  CHECK(d.points.size() == 3);
}

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latfan/polytope.hpp"

namespace latfan {

// Polytope file format: a header line "d n" followed by n lines of d base-10
// integers separated by single spaces. Lines starting with '#' are comments
// and ignored; rows are vertex coordinates. Parsing requires n >= d+1 and
// rejects ragged rows.
struct PolytopeData {
  int dim = 0;
  std::vector<IntVector> points;
};

PolytopeData read_polytope(std::istream& in);           // ParseError on malformed input
PolytopeData read_polytope_file(const std::string& path);  // adds file errors

std::string write_polytope(int dim, const std::vector<IntVector>& rows);
std::string write_polytope(const Polytope& p);

}  // namespace latfan

#include "latfan/io.hpp"

#include <fstream>
#include <sstream>

namespace latfan {

namespace {

// Next non-comment line, stripped of a trailing '\r'. Returns false at EOF.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
  std::istringstream is(line);
  std::vector<long long> out;
  std::string tok;
  while (is >> tok) {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
    }
    if (used != tok.size()) {
      throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

PolytopeData read_polytope(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("missing header line");
  std::vector<long long> header = parse_ints(line, 1);
  if (header.size() != 2) throw ParseError("header must be two integers: d n");
  const long long d = header[0], n = header[1];
  if (d < 1) throw ParseError("dimension must be >= 1");
  if (n < d + 1) throw ParseError("vertex count must be at least d+1");

  PolytopeData data;
  data.dim = static_cast<int>(d);
  for (long long i = 0; i < n; ++i) {
    if (!next_data_line(in, line)) {
      throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    }
    std::vector<long long> row = parse_ints(line, static_cast<int>(i) + 2);
    if (static_cast<long long>(row.size()) != d) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(d));
    }
    IntVector v(row.size());
    for (size_t j = 0; j < row.size(); ++j) v[j] = Int(row[j]);
    data.points.push_back(std::move(v));
  }
  if (next_data_line(in, line)) throw ParseError("trailing content after the vertex rows");
  return data;
}

PolytopeData read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_polytope(in);
}

std::string write_polytope(int dim, const std::vector<IntVector>& rows) {
  std::ostringstream os;
  os << dim << " " << rows.size() << "\n";
  for (const auto& row : rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << " ";
      os << row[j];
    }
    os << "\n";
  }
  return os.str();
}

std::string write_polytope(const Polytope& p) { return write_polytope(p.dim(), p.vertices()); }

}  // namespace latfan

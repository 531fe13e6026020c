#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latfan/checked_int.hpp"

namespace latfan {

// A lattice point (element of N ~ Z^d), stored as a coordinate row.
using IntVector = std::vector<Int>;

// Exact rational; denominator > 0, always in lowest terms.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == Int(0); }
  bool is_integer() const { return den_ == Int(1); }
  // Integral value; DomainError if the value is not an integer.
  Int to_int() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

 private:
  Int num_, den_;
};

// A covector with rational coordinates (element of the dual space M_R).
using RatCovector = std::vector<Rational>;

// Rectangular integer matrix; rows all share one length.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::vector<IntVector> rows);
  static IntMatrix identity(int n);

  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
  const IntVector& row(int i) const { return rows_[i]; }
  Int at(int i, int j) const { return rows_[i][j]; }
  const std::vector<IntVector>& rows() const { return rows_; }

  bool operator==(const IntMatrix& o) const = default;

 private:
  std::vector<IntVector> rows_;
};

Int dot(const IntVector& a, const IntVector& b);
Rational dot(const RatCovector& u, const IntVector& x);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& a);
bool is_zero_vector(const IntVector& a);
std::string to_string(const IntVector& a);

// Exact determinant by fraction-free (Bareiss) elimination.
// DimensionError on non-square input.
Int det(const IntMatrix& m);

// The covector x with <x, a.row(i)> = b[i] for every row of the square
// matrix a. SingularMatrixError when det(a) == 0.
RatCovector solve_unique(const IntMatrix& a, const IntVector& b);

// Row-style Hermite normal form. h = u * m with |det u| = 1; pivot entries
// are positive, entries above each pivot are reduced into [0, pivot), and
// zero rows sit at the bottom.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};
HnfResult hnf(const IntMatrix& m);

// True iff the gcd of the entries is 1. DomainError on a zero vector.
bool is_primitive(const IntVector& v);
// v divided by the gcd of its entries. DomainError on a zero vector.
IntVector primitive(const IntVector& v);

int rank(const IntMatrix& m);

// Primitive integer vectors spanning the rational right kernel
// {x : m.row(i) . x = 0 for all i}.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

// Covectors u_0..u_{d-1} with <u_i, a.row(j)> = delta_ij (the basis of M_R
// dual to the rows of a). SingularMatrixError when det(a) == 0.
std::vector<RatCovector> dual_covectors(const IntMatrix& a);

}  // namespace latfan

#include "latfan/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace latfan {

Rational::Rational(Int n, Int d) : num_(n), den_(d) {
  if (den_ == Int(0)) throw DomainError("Rational: zero denominator");
  if (den_ < Int(0)) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_, den_);
  if (g > Int(1)) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
}

Int Rational::to_int() const {
  if (den_ != Int(1)) throw DomainError("Rational: value is not an integer");
  return num_;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return (num_ * o.den_) <=> (o.num_ * den_);  // denominators are positive
}

IntMatrix::IntMatrix(std::vector<IntVector> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_[0].size()) throw DimensionError("IntMatrix: ragged rows");
  }
}

IntMatrix IntMatrix::identity(int n) {
  std::vector<IntVector> rows(n, IntVector(n, Int(0)));
  for (int i = 0; i < n; ++i) rows[i][i] = Int(1);
  return IntMatrix(std::move(rows));
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatCovector& u, const IntVector& x) {
  if (u.size() != x.size()) throw DimensionError("dot: length mismatch");
  Rational s;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * Rational(x[i]);
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector negate(const IntVector& a) {
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero_vector(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == Int(0); });
}

std::string to_string(const IntVector& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  os << ")";
  return os.str();
}

Int det(const IntMatrix& m) {
  const int n = m.row_count();
  if (n != m.col_count()) throw DimensionError("det: matrix is not square");
  if (n == 0) return Int(1);
  std::vector<IntVector> a = m.rows();
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == Int(0)) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != Int(0)) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return Int(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Int(0);
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

// Forward elimination on a rational working copy; returns pivot columns.
// Used for rank / kernel computations so the integer API stays fraction-free.
std::vector<int> eliminate(std::vector<RatCovector>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

std::vector<RatCovector> to_rational(const IntMatrix& m) {
  std::vector<RatCovector> a(m.row_count());
  for (int i = 0; i < m.row_count(); ++i) {
    a[i].assign(m.row(i).begin(), m.row(i).end());
  }
  return a;
}

}  // namespace

RatCovector solve_unique(const IntMatrix& a, const IntVector& b) {
  const int n = a.row_count();
  if (n != a.col_count()) throw DimensionError("solve_unique: matrix is not square");
  if (static_cast<int>(b.size()) != n) throw DimensionError("solve_unique: rhs length mismatch");
  // <x, row_i> = b_i is the linear system a * x^T = b.
  std::vector<RatCovector> aug = to_rational(a);
  for (int i = 0; i < n; ++i) aug[i].push_back(Rational(b[i]));
  std::vector<int> pivots = eliminate(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() == n) {
    throw SingularMatrixError("solve_unique: singular matrix");
  }
  RatCovector x(n);
  for (int r = 0; r < n; ++r) x[pivots[r]] = aug[r][n] / aug[r][pivots[r]];
  return x;
}

HnfResult hnf(const IntMatrix& m) {
  const int rows = m.row_count();
  const int cols = m.col_count();
  std::vector<IntVector> h = m.rows();
  std::vector<IntVector> u = IntMatrix::identity(rows).rows();

  auto row_op = [&](int dst, int src, Int q) {
    // row dst -= q * row src
    for (int j = 0; j < cols; ++j) h[dst][j] -= q * h[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
  };

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid on the column until a single nonzero entry remains at/below r.
    for (;;) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (h[i][c] != Int(0) && (best < 0 || abs(h[i][c]) < abs(h[best][c]))) best = i;
      }
      if (best < 0) break;
      if (best != r) {
        std::swap(h[r], h[best]);
        std::swap(u[r], u[best]);
      }
      bool reduced_all = true;
      for (int i = r + 1; i < rows; ++i) {
        if (h[i][c] == Int(0)) continue;
        Int q = floor_div(h[i][c], h[r][c]);
        row_op(i, r, q);
        if (h[i][c] != Int(0)) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (h[r][c] == Int(0)) continue;
    if (h[r][c] < Int(0)) {
      for (int j = 0; j < cols; ++j) h[r][j] = -h[r][j];
      for (int j = 0; j < rows; ++j) u[r][j] = -u[r][j];
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h[i][c], h[r][c]);
      if (q != Int(0)) row_op(i, r, q);
    }
    ++r;
  }
  return HnfResult{IntMatrix(std::move(h)), IntMatrix(std::move(u))};
}

bool is_primitive(const IntVector& v) {
  if (is_zero_vector(v)) throw DomainError("is_primitive: zero vector");
  Int g = 0;
  for (Int x : v) g = gcd(g, x);
  return g == Int(1);
}

IntVector primitive(const IntVector& v) {
  if (is_zero_vector(v)) throw DomainError("primitive: zero vector");
  Int g = 0;
  for (Int x : v) g = gcd(g, x);
  IntVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = exact_div(v[i], g);
  return r;
}

int rank(const IntMatrix& m) {
  // Fraction-free elimination with column pivoting; entries stay minor-sized.
  std::vector<IntVector> a = m.rows();
  const int rows = m.row_count();
  const int cols = m.col_count();
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != Int(0)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = exact_div(a[i][j] * a[r][c] - a[i][c] * a[r][j], prev);
      }
      a[i][c] = Int(0);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const int cols = m.col_count();
  std::vector<RatCovector> a = to_rational(m);
  std::vector<int> pivots = eliminate(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // Rational kernel vector with x_f = 1, then cleared to a primitive
    // integer vector.
    RatCovector x(cols);
    x[f] = Rational(Int(1));
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      int c = pivots[r];
      Rational s = a[r][f];
      for (int j = c + 1; j < cols; ++j) {
        if (j != f && !x[j].is_zero()) s += a[r][j] * x[j];
      }
      x[c] = -s / a[r][c];
    }
    Int lcm = 1;
    for (const Rational& q : x) lcm = exact_div(lcm * q.den(), gcd(lcm, q.den()));
    IntVector v(cols);
    for (int j = 0; j < cols; ++j) v[j] = x[j].num() * exact_div(lcm, x[j].den());
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<RatCovector> dual_covectors(const IntMatrix& a) {
  const int n = a.row_count();
  if (n != a.col_count()) throw DimensionError("dual_covectors: matrix is not square");
  Int dt = det(a);
  if (dt == Int(0)) throw SingularMatrixError("dual_covectors: singular matrix");
  // dual_i = column i of a^{-1}; entry j is the (i, j) cofactor over det.
  std::vector<RatCovector> duals(n, RatCovector(n));
  std::vector<IntVector> minor(n - 1, IntVector(n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[mr][mc] = a.at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int m = n == 1 ? Int(1) : det(IntMatrix(minor));
      duals[i][j] = Rational((i + j) % 2 == 0 ? m : -m, dt);
    }
  }
  return duals;
}

}  // namespace latfan

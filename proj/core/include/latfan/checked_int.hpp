#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

#include "latfan/errors.hpp"

namespace latfan {

// 64-bit integer whose arithmetic throws OverflowError instead of wrapping.
// All lattice computations in this library run on Int; the width is ample for
// the coordinate ranges that occur here, and anything larger is a bug we want
// to hear about.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(long long v) : v_(v) {}  // NOLINT: implicit by design

  constexpr long long value() const { return v_; }

  friend Int operator+(Int a, Int b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: addition overflow");
    return Int(r);
  }
  friend Int operator-(Int a, Int b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: subtraction overflow");
    return Int(r);
  }
  friend Int operator*(Int a, Int b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: multiplication overflow");
    return Int(r);
  }
  Int operator-() const { return Int(0) - *this; }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  auto operator<=>(const Int&) const = default;

 private:
  long long v_ = 0;
};

inline Int abs(Int a) { return a < Int(0) ? -a : a; }

inline int sgn(Int a) { return a < Int(0) ? -1 : (a > Int(0) ? 1 : 0); }

// Non-negative gcd; gcd(0, 0) == 0.
Int gcd(Int a, Int b);

// Quotient a/b asserting that b divides a exactly.
Int exact_div(Int a, Int b);

// Floor division / the matching remainder in [0, |b|).
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

std::ostream& operator<<(std::ostream& os, Int a);

}  // namespace latfan

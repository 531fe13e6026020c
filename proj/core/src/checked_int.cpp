#include "latfan/checked_int.hpp"

#include <ostream>

namespace latfan {

Int gcd(Int a, Int b) {
  // Unsigned Euclid so that |INT64_MIN| is representable mid-computation.
  unsigned long long x = a < Int(0) ? -static_cast<unsigned long long>(a.value())
                                    : static_cast<unsigned long long>(a.value());
  unsigned long long y = b < Int(0) ? -static_cast<unsigned long long>(b.value())
                                    : static_cast<unsigned long long>(b.value());
  while (y != 0) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  if (x > 0x7fffffffffffffffULL) throw OverflowError("Int: gcd overflow");
  return Int(static_cast<long long>(x));
}

Int exact_div(Int a, Int b) {
  if (b == Int(0)) throw DomainError("Int: division by zero");
  if (b == Int(-1)) return -a;  // avoids INT64_MIN / -1
  long long q = a.value() / b.value();
  if (a.value() % b.value() != 0) throw DomainError("Int: division is not exact");
  return Int(q);
}

Int floor_div(Int a, Int b) {
  if (b == Int(0)) throw DomainError("Int: division by zero");
  if (b == Int(-1)) return -a;
  long long q = a.value() / b.value();
  long long r = a.value() % b.value();
  if (r != 0 && ((r < 0) != (b.value() < 0))) --q;
  return Int(q);
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

std::ostream& operator<<(std::ostream& os, Int a) { return os << a.value(); }

}  // namespace latfan

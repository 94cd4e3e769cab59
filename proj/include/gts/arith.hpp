#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gts {

// All scalar invariants (lcms, weight products, rational defects) are exact.
// Per-monomial data uses checked 64-bit lanes; overflow is a hard error,
// never a wrap.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::int64_t to_i64(const Int& v, const char* what = "value") {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi)
    throw OverflowError(std::string(what) + " does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

/// ceil(a/b) for b > 0, correct for negative a (ceil(-1/3) = 0).
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b > 0) ++q;
  return q;
}

inline std::int64_t ceil_div_i64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b > 0) ++q;
  return q;
}

/// binom(top, k) for small k, exact; 0 when top < 0.
inline Int binomial(const Int& top, unsigned k) {
  if (top < 0) return 0;
  Int res = 1;
  for (unsigned t = 1; t <= k; ++t) {
    res *= top - Int(k - t);
    res /= t;  // exact: product of t consecutive integers is divisible by t!
  }
  return res;
}

/// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = (a >= 0) ? 1 : -1;
    y = 0;
    return a >= 0 ? a : Int(-a);
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace gts

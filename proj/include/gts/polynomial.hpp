#pragma once

#include "gts/arith.hpp"

#include <cstddef>
#include <vector>

namespace gts {

/// Dense univariate polynomial with checked 64-bit coefficients, indexed by
/// degree.  Degrees reach tens of millions for extreme n = 5 signatures, so
/// coefficients stay in one flat 64-bit array; every arithmetic step traps on
/// overflow instead of wrapping.  The identities checked here only ever
/// produce coefficients bounded by small binomial sums, so a trap indicates
/// a bug, not a capacity problem.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::size_t degree_capacity) : c_(degree_capacity + 1, 0) {}

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow");
    return r;
  }
  static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow");
    return r;
  }

  void add_term(std::size_t degree, std::int64_t coeff) {
    if (degree >= c_.size()) c_.resize(degree + 1, 0);
    c_[degree] = checked_add(c_[degree], coeff);
  }

  std::int64_t coeff(std::size_t degree) const {
    return degree < c_.size() ? c_[degree] : 0;
  }

  /// Degree of the highest nonzero term; -1 for the zero polynomial.
  std::ptrdiff_t degree() const {
    for (std::size_t i = c_.size(); i-- > 0;)
      if (c_[i] != 0) return static_cast<std::ptrdiff_t>(i);
    return -1;
  }

  Int coefficient_sum() const {
    Int s = 0;
    for (std::int64_t v : c_) s += v;
    return s;
  }

  std::size_t term_count() const {
    std::size_t t = 0;
    for (std::int64_t v : c_)
      if (v != 0) ++t;
    return t;
  }

  /// Multiplies in place by (1 - t^a), growing by a.  A single descending
  /// pass suffices: new[d] = old[d] - old[d-a].
  void multiply_one_minus_power(std::size_t a) {
    c_.resize(c_.size() + a, 0);
    for (std::size_t d = c_.size(); d-- > a;)
      c_[d] = checked_sub(c_[d], c_[d - a]);
  }

  const std::vector<std::int64_t>& coeffs() const { return c_; }

  friend bool operator==(const DensePoly& x, const DensePoly& y) {
    const std::size_t n = std::max(x.c_.size(), y.c_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (x.coeff(i) != y.coeff(i)) return false;
    return true;
  }

 private:
  std::vector<std::int64_t> c_;
};

}  // namespace gts

#pragma once

#include "gts/arith.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace gts {

/// An exponent sequence (p_1,...,p_n) together with its derived exact
/// invariants.  The defect nu = 1 - sum 1/p_i must be positive (hyperbolic
/// case); candidates for the hypersurface classification additionally have
/// nu = 1/N with N = lcm(p_i).
struct Signature {
  std::vector<Int> p;           // sorted nondecreasing
  std::vector<Int> input_order; // as given by the caller, for display
  Rat nu;                       // 1 - sum 1/p_i, exact
  Int N;                        // lcm of all p_i
  std::vector<Int> N_sub;       // N_sub[i] = lcm of {p_j : j != i}
  std::optional<std::vector<Int>> q;  // q_i = nu*p_i*N_sub[i], iff all integral

  std::size_t n() const { return p.size(); }

  /// nu == 1/N, the candidate condition for n >= 4.
  bool unit_fraction() const { return nu == Rat(Int(1), N); }

  const std::vector<Int>& q_values() const {
    if (!q) throw std::invalid_argument("signature has no integral q values");
    return *q;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) os << ',';
      os << p[i];
    }
    os << ')';
    return os.str();
  }

  friend bool operator==(const Signature& a, const Signature& b) { return a.p == b.p; }
  friend bool operator<(const Signature& a, const Signature& b) {
    return std::lexicographical_compare(a.p.begin(), a.p.end(), b.p.begin(), b.p.end());
  }
};

/// Builds a Signature from raw exponents.  Requires n >= 3, all p_i >= 2 and
/// sum 1/p_i < 1; rejects anything else.
inline Signature derive(std::vector<Int> p_in) {
  if (p_in.size() < 3)
    throw std::invalid_argument("signature needs at least 3 exponents");
  for (const Int& v : p_in)
    if (v < 2) throw std::invalid_argument("exponents must be >= 2");

  Signature s;
  s.input_order = p_in;
  s.p = std::move(p_in);
  std::sort(s.p.begin(), s.p.end());

  const std::size_t n = s.p.size();
  Rat sum = 0;
  for (const Int& v : s.p) sum += Rat(Int(1), v);
  s.nu = Rat(1) - sum;
  if (s.nu <= 0)
    throw std::invalid_argument("not a valid signature: sum of 1/p_i must be < 1");

  s.N = 1;
  for (const Int& v : s.p) s.N = lcm(s.N, v);

  s.N_sub.assign(n, Int(1));
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) l = lcm(l, s.p[j]);
    s.N_sub[i] = l;
  }

  std::vector<Int> qs(n);
  bool integral = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rat qi = s.nu * Rat(s.p[i] * s.N_sub[i]);
    if (boost::multiprecision::denominator(qi) != 1) {
      integral = false;
      break;
    }
    qs[i] = boost::multiprecision::numerator(qi);
  }
  if (integral) s.q = std::move(qs);
  return s;
}

inline Signature derive(const std::vector<std::int64_t>& p_in) {
  std::vector<Int> v(p_in.begin(), p_in.end());
  return derive(std::move(v));
}

}  // namespace gts

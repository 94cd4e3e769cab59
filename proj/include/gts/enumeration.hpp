#pragma once

#include "gts/signature.hpp"

#include <vector>

namespace gts {

/// All nondecreasing signatures of length n with sum 1/p_i + 1/lcm(p) = 1,
/// sorted lexicographically.
struct CandidateSet {
  std::size_t n = 0;
  std::vector<Signature> signatures;
};

namespace detail {

inline void enumerate_rec(std::size_t n, std::vector<Int>& prefix, const Rat& residual,
                          std::vector<std::vector<Int>>& out) {
  const std::size_t pos = prefix.size() + 1;  // 1-based position being filled
  const Int& num = boost::multiprecision::numerator(residual);
  const Int& den = boost::multiprecision::denominator(residual);
  // p > 1/r strictly, since r = sum of remaining unit fractions + 1/N > 1/p.
  Int lo = den / num + 1;
  if (!prefix.empty() && prefix.back() > lo) lo = prefix.back();
  if (lo < 2) lo = 2;

  if (pos == n) {
    // Final position: 1/p < r <= 1/p + 1/N <= 2/p pins p to (floor(1/r), floor(2/r)].
    Int hi = (2 * den) / num;
    for (Int p = lo; p <= hi; ++p) {
      Rat rem = residual - Rat(Int(1), p);
      Int L = p;
      for (const Int& v : prefix) L = lcm(L, v);
      if (rem == Rat(Int(1), L)) {
        std::vector<Int> sig = prefix;
        sig.push_back(p);
        out.push_back(std::move(sig));
      }
    }
    return;
  }

  // Intermediate position: the n-pos+1 remaining terms plus 1/N are each
  // at most 1/p, hence p <= (n-pos+2)/r.
  Int hi = (Int(n - pos + 2) * den) / num;
  for (Int p = lo; p <= hi; ++p) {
    prefix.push_back(p);
    enumerate_rec(n, prefix, residual - Rat(Int(1), p), out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Exhaustive bounded search for the unit-fraction equation.  Requires n >= 4
/// (for n = 3 the equation does not characterize the classification; use the
/// brute-force engine instead).  Every emitted signature is re-verified with
/// independent rational arithmetic.
inline CandidateSet enumerate_candidates(std::size_t n) {
  if (n < 4)
    throw std::invalid_argument("enumerate_candidates requires n >= 4");
  std::vector<std::vector<Int>> raw;
  std::vector<Int> prefix;
  detail::enumerate_rec(n, prefix, Rat(1), raw);

  CandidateSet set;
  set.n = n;
  set.signatures.reserve(raw.size());
  for (auto& tuple : raw) {
    Signature sig = derive(tuple);
    // Independent soundness check: sum 1/p_i + 1/N == 1 from scratch.
    Rat sum = Rat(Int(1), sig.N);
    for (const Int& v : sig.p) sum += Rat(Int(1), v);
    if (sum != 1)
      throw std::logic_error("enumeration emitted a non-solution " + sig.to_string());
    if (!sig.unit_fraction())
      throw std::logic_error("enumeration emitted nu != 1/N for " + sig.to_string());
    set.signatures.push_back(std::move(sig));
  }
  std::sort(set.signatures.begin(), set.signatures.end());
  for (std::size_t i = 1; i < set.signatures.size(); ++i)
    if (set.signatures[i - 1] == set.signatures[i])
      throw std::logic_error("duplicate candidate emitted");
  return set;
}

/// The divisibility form of the improper Znam condition:
/// p_i | (prod_{j != i} p_j) + 1 for every i.
inline bool znam_divisibility(const std::vector<Int>& p) {
  for (const Int& v : p)
    if (v < 2) throw std::invalid_argument("znam_divisibility requires p_i >= 2");
  for (std::size_t i = 0; i < p.size(); ++i) {
    Int prod = 1;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (j != i) prod *= p[j];
    if ((prod + 1) % p[i] != 0) return false;
  }
  return true;
}

}  // namespace gts

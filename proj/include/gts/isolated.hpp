#pragma once

#include "gts/classifier.hpp"

#include <tuple>
#include <vector>

namespace gts {

/// Isolatedness decision data for an n >= 4 signature.
struct IsolatednessReport {
  bool fraction_test = false;    // sum 1/p_i + 1/prod(p_i) == 1 exactly
  bool structural_test = false;  // hypersurface with all q_i = 1 (R = T)
  // (i, j, s) with i < j and s = gcd(p_i, p_j) > 1: each pair carries a
  // one-parameter family of A_{s-1}-singularities when R != T.
  std::vector<std::tuple<int, int, Int>> non_isolated_pairs;

  bool isolated() const { return fraction_test; }
};

inline bool fraction_condition(const Signature& sig) {
  Int prod = 1;
  for (const Int& v : sig.p) prod *= v;
  Rat sum = Rat(Int(1), prod);
  for (const Int& v : sig.p) sum += Rat(Int(1), v);
  return sum == 1;
}

inline IsolatednessReport isolatedness(const Signature& sig, const Classification& cls) {
  if (sig.n() < 4) throw std::invalid_argument("isolatedness requires n >= 4");
  IsolatednessReport rep;
  rep.fraction_test = fraction_condition(sig);

  bool all_q_one = false;
  if (sig.q) {
    all_q_one = true;
    for (const Int& v : *sig.q)
      if (v != 1) all_q_one = false;
  }
  rep.structural_test = cls.is_hypersurface() && all_q_one;

  for (std::size_t i = 0; i < sig.n(); ++i)
    for (std::size_t j = i + 1; j < sig.n(); ++j) {
      Int s = gcd(sig.p[i], sig.p[j]);
      if (s > 1)
        rep.non_isolated_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j), s);
    }

  if (cls.is_hypersurface() && rep.fraction_test != rep.structural_test)
    throw std::logic_error("isolatedness equivalence violated for " + sig.to_string());
  if (rep.fraction_test && !rep.non_isolated_pairs.empty())
    throw std::logic_error("fraction test true but gcd pairs exist for " + sig.to_string());
  return rep;
}

}  // namespace gts

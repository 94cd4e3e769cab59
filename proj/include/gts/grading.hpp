#pragma once

#include "gts/signature.hpp"

#include <optional>
#include <vector>

namespace gts {

/// Canonical form of a degree class: v = ell*c + sum a_i*X_i with
/// 0 <= a_i <= p_i - 1.  Unique for every class.
struct LClass {
  Int ell;
  std::vector<std::int64_t> a;
};

/// Exponent vector over the ambient variables X_1,...,X_n.
/// Reduced iff exps[i] < p_i for all i.
struct Monomial {
  std::vector<std::int64_t> exps;

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps == y.exps; }
  friend bool operator<(const Monomial& x, const Monomial& y) { return x.exps < y.exps; }
};

/// m(k) = k - sum ceil(k/p_i), the c-coefficient of the class of k*omega.
inline Int m_value(const Signature& sig, const Int& k) {
  Int r = k;
  for (const Int& pi : sig.p) r -= ceil_div(k, pi);
  return r;
}

/// Canonical form of k*omega: ell = m(k), a_i = p_i*ceil(k/p_i) - k.
inline LClass reduced_class(const Signature& sig, const Int& k) {
  LClass c;
  c.ell = m_value(sig, k);
  c.a.reserve(sig.n());
  for (const Int& pi : sig.p)
    c.a.push_back(to_i64(pi * ceil_div(k, pi) - k, "class exponent"));
  return c;
}

/// The unique reduced monomial representing the class of k*omega.
inline Monomial reduced_monomial(const Signature& sig, const Int& k) {
  Monomial mono;
  mono.exps = reduced_class(sig, k).a;
  return mono;
}

inline bool is_reduced(const Signature& sig, const Monomial& mono) {
  if (mono.exps.size() != sig.n()) return false;
  for (std::size_t i = 0; i < sig.n(); ++i)
    if (mono.exps[i] < 0 || Int(mono.exps[i]) >= sig.p[i]) return false;
  return true;
}

/// Degree of a reduced monomial in the omega-grading: the unique j in [0,N)
/// with j == -exps[i] (mod p_i) for all i gives degree j - N*m(j); nullopt
/// when the congruences are inconsistent (monomial not of the form M(k*omega)).
inline std::optional<Int> monomial_degree(const Signature& sig, const Monomial& mono) {
  if (!is_reduced(sig, mono))
    throw std::invalid_argument("monomial_degree requires a reduced monomial");
  // CRT over the (generally non-coprime) moduli p_i.
  Int r = 0, mod = 1;
  for (std::size_t i = 0; i < sig.n(); ++i) {
    const Int& pi = sig.p[i];
    Int target = (pi - mono.exps[i]) % pi;  // j == -e_i (mod p_i)
    Int x, y;
    Int g = ext_gcd(mod, pi, x, y);
    Int diff = target - r;
    if (diff % g != 0) return std::nullopt;
    Int step = pi / g;
    Int t = ((diff / g) * x) % step;
    r += mod * t;
    mod *= step;
    r %= mod;
    if (r < 0) r += mod;
  }
  // mod == N here: the congruences determine j modulo lcm(p_i).
  return r - sig.N * m_value(sig, r);
}

/// dim R_k = binom(m(k)+n-2, n-2) when m(k) >= 0, else 0.
inline Int dim_r(const Signature& sig, const Int& k) {
  if (k < 0) throw std::invalid_argument("dim_r requires k >= 0");
  Int m = m_value(sig, k);
  if (m < 0) return 0;
  return binomial(m + Int(sig.n()) - 2, static_cast<unsigned>(sig.n() - 2));
}

namespace detail {

/// Incremental scanner for a_i(k*omega) and m(k) over k = 0,1,2,...
/// Exponents satisfy a_i(k) == -k (mod p_i), so one step is a decrement
/// with wrap-around; m changes by 1 - #{i : p_i | k}.
class ClassScanner {
 public:
  explicit ClassScanner(const Signature& sig) {
    p_.reserve(sig.n());
    for (const Int& v : sig.p) p_.push_back(to_i64(v, "exponent p_i"));
    a_.assign(p_.size(), 0);
    m_ = 0;
    k_ = 0;
  }

  std::int64_t k() const { return k_; }
  std::int64_t m() const { return m_; }
  const std::vector<std::int64_t>& a() const { return a_; }

  void advance() {
    std::int64_t drops = 0;
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (a_[i] >= 1) {
        --a_[i];
      } else {
        a_[i] = p_[i] - 1;
        ++drops;  // p_i | k, so ceil(k+1/p_i) ticks up
      }
    }
    m_ += 1 - drops;
    ++k_;
  }

 private:
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> a_;
  std::int64_t m_;
  std::int64_t k_;
};

}  // namespace detail
}  // namespace gts

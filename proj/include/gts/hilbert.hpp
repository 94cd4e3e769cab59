#pragma once

#include "gts/grading.hpp"
#include "gts/polynomial.hpp"

#include <vector>

namespace gts {

/// Coefficient of t^k in the Hilbert series of R; identical to dim_r, exposed
/// under the series name for use alongside the polynomial identities.
inline Int hilbert_coefficient(const Signature& sig, const Int& k) { return dim_r(sig, k); }

/// sum_{j=0}^{N-1} t^{j - N*m(j)}, collected.  Exactly N terms (the exponents
/// are distinct mod N), degree (n-1)N+1, constant term 1.
inline DensePoly fsum_polynomial(const Signature& sig) {
  if (!sig.unit_fraction())
    throw std::invalid_argument("fsum_polynomial requires nu = 1/N");
  const std::int64_t N = to_i64(sig.N, "N (signature too large for fsum)");
  const std::size_t n = sig.n();
  DensePoly f(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(N) + 1);
  detail::ClassScanner scan(sig);
  for (std::int64_t j = 0; j < N; ++j) {
    if (j > 0) scan.advance();
    std::int64_t d = j - N * scan.m();
    f.add_term(static_cast<std::size_t>(d), 1);
  }
  return f;
}

/// Exact finite check of the cross-multiplied series identity
///   fsum * prod_j (1 - t^{a_j}) == (1 - t^h) * (1 - t^N)^{n-1}.
inline bool verify_hypersurface_identity(const Signature& sig, const std::vector<Int>& weights,
                                         const Int& h) {
  if (!sig.unit_fraction())
    throw std::invalid_argument("hypersurface identity requires nu = 1/N");
  DensePoly lhs = fsum_polynomial(sig);
  for (const Int& a : weights) {
    if (a < 1) return false;
    lhs.multiply_one_minus_power(static_cast<std::size_t>(to_i64(a, "weight")));
  }

  DensePoly rhs(0);
  rhs.add_term(0, 1);
  const std::size_t N = static_cast<std::size_t>(to_i64(sig.N, "N"));
  for (std::size_t i = 0; i + 1 < sig.n(); ++i) rhs.multiply_one_minus_power(N);
  if (h < 1) return false;
  rhs.multiply_one_minus_power(static_cast<std::size_t>(to_i64(h, "relation degree")));
  return lhs == rhs;
}

/// a(R) = h - sum a_j for a hypersurface presentation.
inline Int a_invariant(const std::vector<Int>& weights, const Int& h) {
  Int s = h;
  for (const Int& a : weights) s -= a;
  return s;
}

/// h * N^{n-2} == prod a_j, exact.
inline bool weight_product_identity(const Signature& sig, const std::vector<Int>& weights,
                                    const Int& h) {
  if (!sig.unit_fraction())
    throw std::invalid_argument("weight product identity requires nu = 1/N");
  Int lhs = h;
  for (std::size_t i = 0; i + 2 < sig.n(); ++i) lhs *= sig.N;
  Int rhs = 1;
  for (const Int& a : weights) rhs *= a;
  return lhs == rhs;
}

/// First (count) coefficients of fsum / (1-t^N)^{n-1} as a power series;
/// termwise these are the dim R_k.
inline std::vector<std::int64_t> truncated_series_dims(const Signature& sig, std::size_t count) {
  DensePoly f = fsum_polynomial(sig);
  const std::size_t N = static_cast<std::size_t>(to_i64(sig.N, "N"));
  std::vector<std::int64_t> out(count, 0);
  for (std::size_t d = 0; d < count; ++d) out[d] = f.coeff(d);
  // Divide by (1-t^N) termwise, n-1 times: cumulative sums with stride N.
  for (std::size_t pass = 0; pass + 1 < sig.n(); ++pass)
    for (std::size_t d = N; d < count; ++d)
      out[d] = DensePoly::checked_add(out[d], out[d - N]);
  return out;
}

/// Bundle of the exact per-presentation series checks.
struct SeriesCertificate {
  Int h;
  std::vector<Int> weights;
  std::ptrdiff_t fsum_degree = -1;
  Int fsum_coefficient_sum;
  struct Checks {
    bool identity = false;
    bool fsum_degree = false;
    bool fsum_coefficient_sum = false;
    bool weight_product = false;
    bool a_invariant_is_one = false;
  } checks;

  bool all_passed() const {
    return checks.identity && checks.fsum_degree && checks.fsum_coefficient_sum &&
           checks.weight_product && checks.a_invariant_is_one;
  }
};

inline SeriesCertificate make_series_certificate(const Signature& sig,
                                                 const std::vector<Int>& weights, const Int& h) {
  SeriesCertificate cert;
  cert.h = h;
  cert.weights = weights;
  DensePoly f = fsum_polynomial(sig);
  cert.fsum_degree = f.degree();
  cert.fsum_coefficient_sum = f.coefficient_sum();
  cert.checks.fsum_degree =
      Int(cert.fsum_degree) == Int(sig.n() - 1) * sig.N + 1;
  cert.checks.fsum_coefficient_sum = cert.fsum_coefficient_sum == sig.N;
  cert.checks.identity = verify_hypersurface_identity(sig, weights, h);
  cert.checks.weight_product = weight_product_identity(sig, weights, h);
  cert.checks.a_invariant_is_one = a_invariant(weights, h) == 1;
  return cert;
}

}  // namespace gts

#pragma once

#include "gts/grading.hpp"
#include "gts/hilbert.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <vector>

namespace gts {

struct BoundTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Explicit basis of R_k: the reduced lead monomial M(k*omega) times the
/// monomials of total degree m(k) in Y_1..Y_{n-1} (Y_n eliminated against
/// Y_1 + ... + Y_n = 0).
struct GradedPieceBasis {
  Int k;
  Monomial lead;
  std::vector<std::vector<std::int64_t>> y_basis;
};

struct GeneratorRep {
  Int degree;
  Monomial lead;
  std::vector<std::int64_t> y_exps;
};

struct GeneratorLedger {
  std::map<Int, Int> per_degree;  // degree -> number of new minimal generators
  Int embdim = 0;
  std::vector<GeneratorRep> generators;
  bool stopped_early = false;  // early-exit threshold tripped; counts are a lower bound
};

namespace detail {

/// Monomials of total degree d in v variables, lexicographically descending
/// on exponent vectors.  Index lookups back a coordinate representation of
/// the degree-d slice of C[Y_1..Y_{v}].
struct YBasis {
  std::vector<std::vector<std::int64_t>> monos;
  std::map<std::vector<std::int64_t>, std::size_t> index;
};

inline void gen_monomials(std::size_t v, std::int64_t degree, std::vector<std::int64_t>& cur,
                          std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == v) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int64_t e = degree; e >= 0; --e) {
    cur.push_back(e);
    gen_monomials(v, degree - e, cur, out);
    cur.pop_back();
  }
}

inline YBasis make_y_basis(std::size_t v, std::int64_t degree) {
  YBasis b;
  std::vector<std::int64_t> cur;
  gen_monomials(v, degree, cur, b.monos);
  for (std::size_t i = 0; i < b.monos.size(); ++i) b.index[b.monos[i]] = i;
  return b;
}

/// Fraction-free row echelon over the integers; exact rank only.
class IntEchelon {
 public:
  explicit IntEchelon(std::size_t width) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces the row against the current basis; keeps it when independent.
  bool insert(std::vector<Int> row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (row[p] == 0) continue;
      const Int a = rows_[r][p];
      const Int b = row[p];
      for (std::size_t c = 0; c < width_; ++c) row[c] = row[c] * a - rows_[r][c] * b;
      normalize(row);
    }
    for (std::size_t c = 0; c < width_; ++c) {
      if (row[c] != 0) {
        pivots_.push_back(c);
        rows_.push_back(std::move(row));
        sort_by_pivot();
        return true;
      }
    }
    return false;
  }

 private:
  void normalize(std::vector<Int>& row) const {
    Int g = 0;
    for (const Int& v : row) g = gts::gcd(g, v);
    if (g > 1)
      for (Int& v : row) v /= g;
  }
  void sort_by_pivot() {
    for (std::size_t i = rows_.size(); i-- > 1;) {
      if (pivots_[i - 1] <= pivots_[i]) break;
      std::swap(pivots_[i - 1], pivots_[i]);
      std::swap(rows_[i - 1], rows_[i]);
    }
  }

  std::size_t width_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Int>> rows_;
};

}  // namespace detail

inline GradedPieceBasis graded_basis(const Signature& sig, const Int& k) {
  if (k < 0) throw std::invalid_argument("graded_basis requires k >= 0");
  GradedPieceBasis b;
  b.k = k;
  b.lead = reduced_monomial(sig, k);
  Int m = m_value(sig, k);
  if (m >= 0) {
    auto yb = detail::make_y_basis(sig.n() - 1, to_i64(m, "m(k)"));
    b.y_basis = std::move(yb.monos);
  }
  return b;
}

/// Product of two basis elements M(k1*w)*y^alpha1 and M(k2*w)*y^alpha2,
/// expanded in the degree-(k1+k2) basis: the lead monomials multiply with a
/// carry Y_i for every i with a_i(k1*w) + a_i(k2*w) >= p_i, and a carried Y_n
/// rewrites as -(Y_1 + ... + Y_{n-1}).  Returns (coefficient, y-exponent)
/// terms of the cofactor polynomial.
inline std::vector<std::pair<Int, std::vector<std::int64_t>>> multiply_basis_elements(
    const Signature& sig, const Int& k1, const std::vector<std::int64_t>& alpha1, const Int& k2,
    const std::vector<std::int64_t>& alpha2) {
  const std::size_t n = sig.n();
  LClass c1 = reduced_class(sig, k1);
  LClass c2 = reduced_class(sig, k2);
  std::vector<std::int64_t> base(n - 1, 0);
  for (std::size_t t = 0; t + 1 < n; ++t) base[t] = alpha1[t] + alpha2[t];
  bool carry_last = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (Int(c1.a[i]) + Int(c2.a[i]) >= sig.p[i]) {
      if (i + 1 == n)
        carry_last = true;
      else
        base[i] += 1;
    }
  }
  std::vector<std::pair<Int, std::vector<std::int64_t>>> terms;
  if (!carry_last) {
    terms.emplace_back(1, base);
  } else {
    for (std::size_t t = 0; t + 1 < n; ++t) {
      auto e = base;
      e[t] += 1;
      terms.emplace_back(-1, std::move(e));
    }
  }
  return terms;
}

namespace detail {

/// Degree-by-degree graded Nakayama: dim(m/m^2)_k = dim R_k - dim(m*m)_k,
/// with the product space spanned exactly over the explicit bases.
class NakayamaWorker {
 public:
  NakayamaWorker(const Signature& sig, std::int64_t bound)
      : sig_(sig), n_(sig.n()), bound_(bound) {
    if (bound < 1) throw std::invalid_argument("degree bound must be positive");
    if (n_ > 16) throw std::invalid_argument("brute-force engine supports n <= 16");
    p64_.reserve(n_);
    for (const Int& v : sig.p) p64_.push_back(to_i64(v, "p_i"));
    m_.resize(bound_ + 1);
    a_.resize(bound_ + 1);
    ClassScanner scan(sig);
    std::int64_t max_m = 0;
    for (std::int64_t k = 0; k <= bound_; ++k) {
      if (k > 0) scan.advance();
      m_[k] = scan.m();
      a_[k] = scan.a();
      max_m = std::max(max_m, m_[k]);
    }
    m12_range_ = 2 * max_m + 1;
    block_stamp_.assign((std::size_t(1) << n_) * static_cast<std::size_t>(m12_range_), 0);
  }

  GeneratorLedger run(std::optional<Int> early_stop) {
    GeneratorLedger ledger;
    for (std::int64_t k = 1; k <= bound_; ++k) {
      if (m_[k] < 0) continue;
      const std::int64_t mk = m_[k];
      const YBasis& basis = y_basis(mk);
      const std::size_t dim = basis.monos.size();

      IntEchelon ech(dim);
      span_products(k, ech, dim);
      const std::size_t rank = ech.rank();
      if (rank < dim) {
        Int deficiency = Int(dim - rank);
        ledger.per_degree[Int(k)] = deficiency;
        ledger.embdim += deficiency;
        for (std::size_t t = 0; t < dim && ech.rank() < dim; ++t) {
          std::vector<Int> unit(dim, 0);
          unit[t] = 1;
          if (ech.insert(std::move(unit))) {
            GeneratorRep rep;
            rep.degree = k;
            rep.lead.exps = a_[k];
            rep.y_exps = basis.monos[t];
            ledger.generators.push_back(std::move(rep));
          }
        }
        if (early_stop && ledger.embdim > *early_stop) {
          ledger.stopped_early = true;
          return ledger;
        }
      }
    }
    return ledger;
  }

 private:
  const YBasis& y_basis(std::int64_t degree) {
    auto it = y_cache_.find(degree);
    if (it == y_cache_.end())
      it = y_cache_.emplace(degree, make_y_basis(n_ - 1, degree)).first;
    return it->second;
  }

  // Rows contributed by one (carry-mask, m1+m2) block, expressed in the
  // degree-(m1+m2+|mask|) basis.  Identical blocks arise from many (k1,k2)
  // pairs, so the expansion is memoized.
  const std::vector<std::vector<Int>>& block_rows(std::uint32_t mask, std::int64_t m12) {
    auto key = std::make_pair(mask, m12);
    auto it = block_cache_.find(key);
    if (it != block_cache_.end()) return it->second;

    std::int64_t mk = m12;
    for (std::size_t i = 0; i < n_; ++i)
      if (mask & (1u << i)) ++mk;
    const YBasis& from = y_basis(m12);
    const YBasis& to = y_basis(mk);
    std::vector<std::vector<Int>> rows;
    rows.reserve(from.monos.size());
    const bool carry_last = (mask >> (n_ - 1)) & 1u;
    for (const auto& beta : from.monos) {
      std::vector<std::int64_t> base = beta;
      for (std::size_t i = 0; i + 1 < n_; ++i)
        if (mask & (1u << i)) base[i] += 1;
      std::vector<Int> row(to.monos.size(), 0);
      if (!carry_last) {
        row[to.index.at(base)] = 1;
      } else {
        for (std::size_t t = 0; t + 1 < n_; ++t) {
          auto e = base;
          e[t] += 1;
          row[to.index.at(e)] -= 1;
        }
      }
      rows.push_back(std::move(row));
    }
    return block_cache_.emplace(key, std::move(rows)).first->second;
  }

  void span_products(std::int64_t k, IntEchelon& ech, std::size_t dim) {
    ++stamp_;
    for (std::int64_t k1 = 1; k1 * 2 <= k; ++k1) {
      const std::int64_t k2 = k - k1;
      if (m_[k1] < 0 || m_[k2] < 0) continue;
      std::uint32_t mask = 0;
      std::int64_t carries = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (a_[k1][i] + a_[k2][i] >= p64_[i]) {
          mask |= (1u << i);
          ++carries;
        }
      const std::int64_t m12 = m_[k1] + m_[k2];
      assert(m12 + carries == m_[k]);  // carry identity
      const std::size_t key =
          static_cast<std::size_t>(mask) * static_cast<std::size_t>(m12_range_) +
          static_cast<std::size_t>(m12);
      if (block_stamp_[key] == stamp_) continue;
      block_stamp_[key] = stamp_;
      for (const auto& row : block_rows(mask, m12)) {
        ech.insert(row);
        if (ech.rank() == dim) return;
      }
    }
  }

  const Signature& sig_;
  const std::size_t n_;
  const std::int64_t bound_;
  std::vector<std::int64_t> p64_;
  std::vector<std::int64_t> m_;
  std::vector<std::vector<std::int64_t>> a_;
  std::map<std::int64_t, YBasis> y_cache_;
  std::map<std::pair<std::uint32_t, std::int64_t>, std::vector<std::vector<Int>>> block_cache_;
  std::int64_t m12_range_ = 1;
  std::vector<std::uint32_t> block_stamp_;
  std::uint32_t stamp_ = 0;
};

}  // namespace detail

/// Minimal generators of R in all degrees <= degree_bound.  For nu = 1/N the
/// bound N*(n-1)+1 is known to cover every generator; other signatures need a
/// caller-supplied bound plus a post-hoc sufficiency check (see classify_n3).
inline GeneratorLedger embedding_dimension(const Signature& sig, const Int& degree_bound,
                                           std::optional<Int> early_stop = std::nullopt) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be positive");
  detail::NakayamaWorker worker(sig, to_i64(degree_bound, "degree bound"));
  return worker.run(early_stop);
}

struct N3Row {
  Signature sig;
  std::vector<Int> weights;          // generator degrees, descending
  Int h;                             // sum of weights + 1
  std::vector<Monomial> generators;  // ambient representatives, aligned with weights
};

/// Termwise check that (1 - t^h) / prod (1 - t^{a_i}) reproduces dim R_k for
/// all k <= h + sum a_i.  Converts the unknown n = 3 generation bound into a
/// verified certificate; failure aborts the scan.
inline bool n3_series_certificate(const Signature& sig, const std::vector<Int>& weights,
                                  const Int& h) {
  std::int64_t H = to_i64(h, "relation degree");
  std::int64_t D = H;
  for (const Int& a : weights) D += to_i64(a, "weight");
  std::vector<std::int64_t> series(D + 1, 0);
  series[0] = 1;
  if (H <= D) series[H] = -1;
  for (const Int& a : weights) {
    std::int64_t av = to_i64(a, "weight");
    for (std::int64_t d = av; d <= D; ++d)
      series[d] = DensePoly::checked_add(series[d], series[d - av]);
  }
  for (std::int64_t d = 0; d <= D; ++d)
    if (Int(series[d]) != dim_r(sig, d)) return false;
  return true;
}

/// Certified classification of one n = 3 signature: nullopt when the ring
/// needs more than 3 generators; otherwise the generator degrees, checked by
/// the series certificate.  Throws BoundTooSmall when the scan bound cannot
/// be certified.
inline std::optional<N3Row> classify_n3_signature(const Signature& sig) {
  if (sig.n() != 3) throw std::invalid_argument("classify_n3_signature requires n = 3");
  Int bound = 2 * sig.N + 2;
  GeneratorLedger ledger = embedding_dimension(sig, bound, Int(3));
  if (ledger.stopped_early) return std::nullopt;  // witnessed embdim > 3
  if (ledger.embdim < 3)
    throw BoundTooSmall("fewer than 3 generators below bound for " + sig.to_string());
  N3Row row;
  row.sig = sig;
  std::vector<std::pair<Int, Monomial>> reps;
  for (const auto& g : ledger.generators) {
    // Y_i factors are pure powers X_i^{p_i}; fold them into the lead.
    Monomial ambient = g.lead;
    for (std::size_t i = 0; i + 1 < sig.n(); ++i)
      ambient.exps[i] += g.y_exps[i] * to_i64(sig.p[i], "p_i");
    reps.emplace_back(g.degree, std::move(ambient));
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second.exps > b.second.exps;
  });
  row.h = 1;
  for (auto& [deg, mono] : reps) {
    row.weights.push_back(deg);
    row.generators.push_back(std::move(mono));
    row.h += deg;
  }
  if (!n3_series_certificate(sig, row.weights, row.h))
    throw BoundTooSmall("series certificate failed for " + sig.to_string() +
                        ": raise the scan degree bound");
  return row;
}

/// Scans all n = 3 signatures with entries <= scan_max and returns the ones
/// with embedding dimension 3, i.e. the hypersurface rows, with their
/// generator degrees and relation degree.  Every returned row is certified;
/// completeness of the table needs scan_max >= 14 (the largest classical
/// entry is 9, the default 50 leaves a wide margin).
inline std::vector<N3Row> classify_n3(const Int& scan_max) {
  if (scan_max < 2)
    throw std::invalid_argument("classify_n3 requires scan_max >= 2");
  const std::int64_t top = to_i64(scan_max, "scan_max");
  std::vector<N3Row> rows;
  for (std::int64_t p = 2; p <= top; ++p)
    for (std::int64_t q = p; q <= top; ++q)
      for (std::int64_t r = q; r <= top; ++r) {
        // hyperbolicity: 1/p + 1/q + 1/r < 1
        if (q * r + p * r + p * q >= p * q * r) continue;
        Signature sig = derive(std::vector<std::int64_t>{p, q, r});
        if (auto row = classify_n3_signature(sig)) rows.push_back(std::move(*row));
      }
  std::sort(rows.begin(), rows.end(),
            [](const N3Row& a, const N3Row& b) { return a.sig < b.sig; });
  return rows;
}

}  // namespace gts

#include "gts/classifier.hpp"
#include "gts/enumeration.hpp"
#include "gts/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using gts::Int;

namespace {

// Deterministic generators: every run exercises the same >= 10^3 cases.
std::mt19937_64 rng(0xC0FFEE);

std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

const std::vector<gts::Signature>& candidates4() {
  static const auto set = gts::enumerate_candidates(4);
  return set.signatures;
}

const gts::Signature& random_candidate() {
  return candidates4()[static_cast<std::size_t>(
      uniform(0, static_cast<std::int64_t>(candidates4().size()) - 1))];
}

gts::Signature random_hyperbolic_signature() {
  for (;;) {
    std::size_t n = static_cast<std::size_t>(uniform(3, 5));
    std::vector<std::int64_t> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(uniform(2, 40));
    gts::Rat sum = 0;
    for (auto v : p) sum += gts::Rat(1, v);
    if (sum < 1) return gts::derive(p);
  }
}

TEST(Properties, MPeriodicity) {
  for (std::size_t c = 0; c < 1200; ++c) {
    const auto& s = random_candidate();
    std::int64_t N = gts::to_i64(s.N, "N");
    std::int64_t j = uniform(0, N - 1);
    std::int64_t k = uniform(-3, 3);
    EXPECT_EQ(gts::m_value(s, Int(j) + s.N * k), gts::m_value(s, j) + k)
        << s.to_string() << " j=" << j << " k=" << k;
  }
}

TEST(Properties, MValueRangeOnCandidates) {
  // m(0) = 0, m(1) = -(n-1), and -(n-2) <= m(k) <= 0 for 2 <= k <= N-1.
  for (const auto& s : candidates4()) {
    EXPECT_EQ(gts::m_value(s, 0), 0);
    EXPECT_EQ(gts::m_value(s, 1), -Int(s.n() - 1));
  }
  std::size_t cases = 0;
  while (cases < 1500) {
    const auto& s = random_candidate();
    std::int64_t N = gts::to_i64(s.N, "N");
    if (N < 3) continue;
    std::int64_t k = uniform(2, N - 1);
    Int m = gts::m_value(s, k);
    EXPECT_LE(m, 0) << s.to_string() << " k=" << k;
    EXPECT_GE(m, -Int(s.n() - 2)) << s.to_string() << " k=" << k;
    ++cases;
  }
}

TEST(Properties, ReductionConsistency) {
  // The canonical form of k*omega: ell = m(k) and a_i == -k (mod p_i).
  for (std::size_t c = 0; c < 1200; ++c) {
    auto s = random_hyperbolic_signature();
    std::int64_t k = uniform(-1000000, 1000000);
    auto cls = gts::reduced_class(s, k);
    EXPECT_EQ(cls.ell, gts::m_value(s, k));
    for (std::size_t i = 0; i < s.n(); ++i) {
      Int pi = s.p[i];
      EXPECT_GE(cls.a[i], 0);
      EXPECT_LT(Int(cls.a[i]), pi);
      EXPECT_EQ((Int(cls.a[i]) + k) % pi, 0) << s.to_string() << " k=" << k << " i=" << i;
    }
  }
}

TEST(Properties, DimMatchesExplicitBasisUpTo3N) {
  // 10 deterministic-random unit-fraction candidates, degrees sampled
  // densely up to 3N.
  std::size_t total_checks = 0;
  for (int t = 0; t < 10; ++t) {
    const auto& s = random_candidate();
    std::int64_t N = gts::to_i64(s.N, "N");
    std::int64_t step = std::max<std::int64_t>(1, (3 * N) / 600);
    for (std::int64_t k = 0; k <= 3 * N; k += step) {
      auto basis = gts::graded_basis(s, k);
      EXPECT_EQ(Int(basis.y_basis.size()), gts::dim_r(s, k)) << s.to_string() << " k=" << k;
      ++total_checks;
    }
  }
  EXPECT_GE(total_checks, 1000u);
}

TEST(Properties, FactorizationSoundnessOnRandomProducts) {
  // Build a product with known multiplicities, refactor it, and check the
  // result reproduces the exponent vector exactly (the multiset found may
  // legitimately differ from the one used to build the product).
  for (std::size_t c = 0; c < 1200; ++c) {
    std::size_t nv = static_cast<std::size_t>(uniform(2, 5));
    std::size_t ng = static_cast<std::size_t>(uniform(2, 5));
    std::vector<gts::Monomial> gens;
    for (std::size_t g = 0; g < ng; ++g) {
      gts::Monomial m;
      bool nonzero = false;
      for (std::size_t v = 0; v < nv; ++v) {
        m.exps.push_back(uniform(0, 3));
        if (m.exps.back() > 0) nonzero = true;
      }
      if (!nonzero) m.exps[static_cast<std::size_t>(uniform(0, nv - 1))] = 1;
      gens.push_back(std::move(m));
    }
    gts::Monomial target;
    target.exps.assign(nv, 0);
    for (std::size_t g = 0; g < ng; ++g) {
      std::int64_t mult = uniform(0, 4);
      for (std::size_t v = 0; v < nv; ++v) target.exps[v] += mult * gens[g].exps[v];
    }
    auto r = gts::factor_over_generators(target, gens);
    ASSERT_TRUE(r.has_value());  // a factorization exists by construction
    for (std::size_t v = 0; v < nv; ++v) {
      Int acc = 0;
      for (std::size_t g = 0; g < ng; ++g) acc += (*r)[g] * gens[g].exps[v];
      EXPECT_EQ(acc, target.exps[v]);
    }
  }
}

TEST(Properties, SuperadditivityOfM) {
  // m(k1) + m(k2) <= m(k1+k2): the carry identity adds nonnegative terms.
  for (std::size_t c = 0; c < 1500; ++c) {
    const auto& s = random_candidate();
    std::int64_t k1 = uniform(0, 5000);
    std::int64_t k2 = uniform(0, 5000);
    EXPECT_LE(gts::m_value(s, k1) + gts::m_value(s, k2), gts::m_value(s, Int(k1 + k2)))
        << s.to_string() << " " << k1 << "," << k2;
  }
}

TEST(Properties, MonomialDegreeInvertsReducedMonomial) {
  // On k in [0,N) the reduced monomial has degree k - N*m(k); in particular
  // degree k exactly when m(k) = 0.
  std::size_t zero_cases = 0;
  for (std::size_t c = 0; c < 1500; ++c) {
    const auto& s = random_candidate();
    std::int64_t N = gts::to_i64(s.N, "N");
    std::int64_t k = uniform(0, N - 1);
    auto mono = gts::reduced_monomial(s, k);
    auto deg = gts::monomial_degree(s, mono);
    ASSERT_TRUE(deg.has_value());
    Int m = gts::m_value(s, k);
    EXPECT_EQ(*deg, Int(k) - s.N * m) << s.to_string() << " k=" << k;
    if (m == 0) {
      EXPECT_EQ(*deg, k);
      ++zero_cases;
    }
  }
  EXPECT_GT(zero_cases, 50u);
}

TEST(Properties, FsumShapeOnAllCandidates) {
  for (const auto& s : candidates4()) {
    auto f = gts::fsum_polynomial(s);
    EXPECT_EQ(Int(f.degree()), Int(s.n() - 1) * s.N + 1) << s.to_string();
    EXPECT_EQ(f.coefficient_sum(), s.N) << s.to_string();
    EXPECT_EQ(Int(f.term_count()), s.N) << s.to_string();  // exponents distinct mod N
  }
}

}  // namespace

#pragma once

#include "gts/grading.hpp"
#include "gts/polynomial.hpp"
#include "gts/hilbert.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gts {

/// Polynomial in the generator symbols; exponent vectors are indexed by
/// generator position.  Kept in a canonical normalized form (terms sorted
/// lexicographically descending, zero terms dropped).
struct GenPoly {
  struct Term {
    Int coeff;
    std::vector<std::int64_t> exps;
  };
  std::vector<Term> terms;

  void normalize() {
    std::map<std::vector<std::int64_t>, Int, std::greater<>> collect;
    for (auto& t : terms) collect[t.exps] += t.coeff;
    terms.clear();
    for (auto& [e, c] : collect)
      if (c != 0) terms.push_back({c, e});
  }

  friend bool operator==(const GenPoly& a, const GenPoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (a.terms[i].coeff != b.terms[i].coeff || a.terms[i].exps != b.terms[i].exps)
        return false;
    return true;
  }
};

/// One generator set to test: n monomials with their weights, already in
/// display order (weight descending, ties by ascending exponent vector).
/// chosen_i is the index (into the sorted signature) of the variable whose
/// pure power was replaced by the product generator; absent when R = T.
struct GeneratorCandidate {
  std::optional<int> chosen_i;
  std::vector<Monomial> gens;
  std::vector<Int> weights;
  Int h;  // degree of the defining relation
};

struct HypersurfacePresentation {
  std::vector<Monomial> generators;
  std::vector<Int> weights;
  Int h;
  GenPoly relation;              // expanded canonical form
  std::string relation_display;  // factored form, e.g. "x^2+w(y^3+z^7+w^22)"
  std::optional<int> chosen_i;
};

struct CandidateFailure {
  std::optional<int> chosen_i;
  std::vector<Int> failing_k;  // capped sample, ascending
  Int total_failures = 0;
};

struct Classification {
  enum class Verdict { NotCandidate, CandidateRejected, Hypersurface };
  Verdict verdict = Verdict::NotCandidate;
  std::optional<HypersurfacePresentation> presentation;
  std::vector<CandidateFailure> failures;

  bool is_hypersurface() const { return verdict == Verdict::Hypersurface; }
};

/// Generator sets implied by the q-profile of a unit-fraction candidate.
/// All q_i = 1 gives the single ambient set {X_j}; otherwise one candidate
/// per index i with q_i = p_i.  Empty result means R cannot be a hypersurface.
inline std::vector<GeneratorCandidate> candidate_generators(const Signature& sig) {
  if (!sig.unit_fraction() || !sig.q)
    throw std::invalid_argument("candidate_generators requires nu = 1/N");
  const auto& q = *sig.q;
  const std::size_t n = sig.n();

  auto finalize = [&](GeneratorCandidate cand) {
    // Display order: weight descending, ties by descending exponent vector
    // (earliest ambient variable first).
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (cand.weights[a] != cand.weights[b]) return cand.weights[a] > cand.weights[b];
      return cand.gens[a].exps > cand.gens[b].exps;
    });
    GeneratorCandidate out;
    out.chosen_i = cand.chosen_i;
    out.h = cand.h;
    for (std::size_t i : idx) {
      out.gens.push_back(cand.gens[i]);
      out.weights.push_back(cand.weights[i]);
    }
    Int wsum = 0;
    for (const Int& w : out.weights) {
      if (w < 1) throw std::logic_error("non-positive generator weight for " + sig.to_string());
      wsum += w;
    }
    if (out.h != wsum + 1)
      throw std::logic_error("relation degree mismatch for " + sig.to_string());
    return out;
  };

  bool all_one = true;
  for (const Int& v : q)
    if (v != 1) all_one = false;

  std::vector<GeneratorCandidate> result;
  if (all_one) {
    GeneratorCandidate cand;
    cand.h = sig.N;
    for (std::size_t j = 0; j < n; ++j) {
      Monomial g;
      g.exps.assign(n, 0);
      g.exps[j] = 1;
      cand.gens.push_back(std::move(g));
      cand.weights.push_back(sig.N / sig.p[j]);
    }
    result.push_back(finalize(std::move(cand)));
    return result;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (q[i] != sig.p[i]) continue;
    GeneratorCandidate cand;
    cand.chosen_i = static_cast<int>(i);
    Int product_weight = sig.N - 1;
    Int mrel_degree = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Monomial g;
      g.exps.assign(n, 0);
      if (j == i) {
        for (std::size_t k = 0; k < n; ++k)
          if (q[k] != 1) g.exps[k] = 1;
      } else {
        g.exps[j] = to_i64(q[j], "generator exponent");
        if (q[j] != 1) mrel_degree += sig.N_sub[j];
      }
      cand.gens.push_back(std::move(g));
      cand.weights.push_back(j == i ? Int(0) : sig.N_sub[j]);
    }
    for (std::size_t k = 0; k < n; ++k)
      if (q[k] == 1) product_weight -= sig.N_sub[k];
    cand.weights[i] = product_weight;
    cand.h = sig.N + mrel_degree;
    result.push_back(finalize(std::move(cand)));
  }
  return result;
}

/// Nonnegative integer multiplicities c with sum c_j * gens[j] = mono
/// componentwise, or nullopt.  Constraint propagation (variables touched by a
/// single live generator force its multiplicity) resolves the structured sets
/// used here without search; a bounded depth-first search covers the rest.
inline std::optional<std::vector<Int>> factor_over_generators(const Monomial& mono,
                                                              const std::vector<Monomial>& gens) {
  const std::size_t nv = mono.exps.size();
  const std::size_t ng = gens.size();
  for (const auto& g : gens) {
    if (g.exps.size() != nv)
      throw std::invalid_argument("generator variable count mismatch");
    bool zero = true;
    for (auto e : g.exps)
      if (e != 0) zero = false;
    if (zero) throw std::invalid_argument("zero generator monomial");
  }
  for (auto e : mono.exps)
    if (e < 0) throw std::invalid_argument("negative exponent");

  // State: rem = exponents still to cover, mult[j] = -1 while undecided.
  auto propagate = [&](std::vector<std::int64_t>& r, std::vector<std::int64_t>& m) -> int {
    // -1 contradiction, 0 stalled, 1 fully decided
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < nv; ++v) {
        std::size_t live = 0, last = 0;
        for (std::size_t j = 0; j < ng; ++j)
          if (m[j] < 0 && gens[j].exps[v] > 0) {
            ++live;
            last = j;
          }
        if (live == 0) {
          if (r[v] != 0) return -1;
          continue;
        }
        if (r[v] == 0) {
          for (std::size_t j = 0; j < ng; ++j)
            if (m[j] < 0 && gens[j].exps[v] > 0) m[j] = 0;
          changed = true;
          continue;
        }
        if (live == 1) {
          if (r[v] % gens[last].exps[v] != 0) return -1;
          std::int64_t c = r[v] / gens[last].exps[v];
          for (std::size_t u = 0; u < nv; ++u) {
            r[u] -= c * gens[last].exps[u];
            if (r[u] < 0) return -1;
          }
          m[last] = c;
          changed = true;
        }
      }
    }
    for (std::size_t j = 0; j < ng; ++j)
      if (m[j] < 0) return 0;
    for (std::size_t v = 0; v < nv; ++v)
      if (r[v] != 0) return -1;
    return 1;
  };

  std::vector<std::int64_t> solution;
  auto solve = [&](auto&& self, std::vector<std::int64_t> r,
                   std::vector<std::int64_t> m) -> bool {
    int st = propagate(r, m);
    if (st == -1) return false;
    if (st == 1) {
      solution = std::move(m);
      return true;
    }
    // Stalled: branch on the undecided generator with the tightest bound.
    std::size_t best = ng;
    std::int64_t best_ub = 0;
    for (std::size_t j = 0; j < ng; ++j) {
      if (m[j] >= 0) continue;
      std::int64_t ub = std::numeric_limits<std::int64_t>::max();
      for (std::size_t v = 0; v < nv; ++v)
        if (gens[j].exps[v] > 0) ub = std::min(ub, r[v] / gens[j].exps[v]);
      if (best == ng || ub < best_ub) {
        best = j;
        best_ub = ub;
      }
    }
    for (std::int64_t c = best_ub; c >= 0; --c) {
      std::vector<std::int64_t> r2 = r;
      std::vector<std::int64_t> m2 = m;
      m2[best] = c;
      bool feasible = true;
      for (std::size_t v = 0; v < nv && feasible; ++v) {
        r2[v] -= c * gens[best].exps[v];
        if (r2[v] < 0) feasible = false;
      }
      if (feasible && self(self, std::move(r2), std::move(m2))) return true;
    }
    return false;
  };

  std::vector<std::int64_t> mult(ng, -1);
  if (!solve(solve, mono.exps, std::move(mult))) return std::nullopt;
  std::vector<Int> out(solution.begin(), solution.end());
#ifdef GTS_PARANOID
  for (std::size_t v = 0; v < nv; ++v) {
    Int acc = 0;
    for (std::size_t j = 0; j < ng; ++j) acc += out[j] * gens[j].exps[v];
    if (acc != mono.exps[v]) throw std::logic_error("factorization soundness violated");
  }
#endif
  return out;
}

namespace detail {

inline std::vector<std::string> generator_symbols(std::size_t n) {
  if (n == 4) return {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

inline std::string symbol_monomial_string(const std::vector<std::int64_t>& exps,
                                          const std::vector<std::string>& names,
                                          const Int& coeff = 1) {
  std::string out;
  if (coeff != 1) out += coeff.str();
  bool any = false;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    any = true;
    out += names[i];
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  if (!any && coeff == 1) out = "1";
  return out;
}

}  // namespace detail

struct RelationBuild {
  GenPoly poly;
  std::string display;
};

/// Expands M_rel * (sum X_j^{p_j}) into n ambient monomials and rewrites each
/// one over the generator set.  Fails hard when a term does not factor or a
/// degree check trips: that indicates an incorrectly accepted candidate.
inline RelationBuild build_relation(const Signature& sig, const GeneratorCandidate& cand) {
  const std::size_t n = sig.n();
  std::vector<std::int64_t> mrel(n, 0);
  if (cand.chosen_i) {
    const auto& q = sig.q_values();
    for (std::size_t k = 0; k < n; ++k)
      if (static_cast<int>(k) != *cand.chosen_i && q[k] != 1)
        mrel[k] = to_i64(q[k], "relation exponent");
  }

  std::vector<GenPoly::Term> by_j(n);
  for (std::size_t j = 0; j < n; ++j) {
    Monomial ambient;
    ambient.exps = mrel;
    ambient.exps[j] += to_i64(sig.p[j], "relation exponent");
    auto mults = factor_over_generators(ambient, cand.gens);
    if (!mults)
      throw std::logic_error("relation term does not factor over generators for " +
                             sig.to_string());
    GenPoly::Term term;
    term.coeff = 1;
    Int degree = 0;
    for (std::size_t g = 0; g < n; ++g) {
      term.exps.push_back(to_i64((*mults)[g], "relation multiplicity"));
      degree += (*mults)[g] * cand.weights[g];
    }
    if (degree != cand.h)
      throw std::logic_error("relation term degree mismatch for " + sig.to_string());
    by_j[j] = std::move(term);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (by_j[a].exps == by_j[b].exps)
        throw std::logic_error("relation terms collide for " + sig.to_string());

  RelationBuild out;
  out.poly.terms = by_j;
  out.poly.normalize();

  const auto names = detail::generator_symbols(n);
  if (!cand.chosen_i) {
    std::vector<GenPoly::Term> sorted = by_j;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.exps > b.exps; });
    for (std::size_t t = 0; t < sorted.size(); ++t) {
      if (t) out.display += "+";
      out.display += detail::symbol_monomial_string(sorted[t].exps, names);
    }
    return out;
  }

  // Factored display: the term coming from j = chosen_i stands alone; the
  // remaining n-1 terms share a common generator cofactor.
  std::size_t lone = static_cast<std::size_t>(*cand.chosen_i);
  std::vector<GenPoly::Term> rest;
  for (std::size_t j = 0; j < n; ++j)
    if (j != lone) rest.push_back(by_j[j]);
  std::vector<std::int64_t> cof = rest.front().exps;
  for (const auto& t : rest)
    for (std::size_t g = 0; g < n; ++g) cof[g] = std::min(cof[g], t.exps[g]);
  for (auto& t : rest)
    for (std::size_t g = 0; g < n; ++g) t.exps[g] -= cof[g];
  std::sort(rest.begin(), rest.end(),
            [](const auto& a, const auto& b) { return a.exps > b.exps; });

  out.display = detail::symbol_monomial_string(by_j[lone].exps, names);
  bool trivial_cof = std::all_of(cof.begin(), cof.end(), [](auto e) { return e == 0; });
  if (trivial_cof) {
    for (const auto& t : rest)
      out.display += "+" + detail::symbol_monomial_string(t.exps, names);
  } else {
    out.display += "+" + detail::symbol_monomial_string(cof, names) + "(";
    for (std::size_t t = 0; t < rest.size(); ++t) {
      if (t) out.display += "+";
      out.display += detail::symbol_monomial_string(rest[t].exps, names);
    }
    out.display += ")";
  }
  return out;
}

/// Full decision procedure for n >= 4.  NotCandidate unless nu = 1/N;
/// otherwise each generator candidate is tested by factoring every reduced
/// monomial M(k*omega), k in [0,N), and the accepted presentation must also
/// satisfy the exact Hilbert-series identity.
inline Classification classify(const Signature& sig) {
  if (sig.n() < 4) throw std::invalid_argument("classify requires n >= 4");
  Classification cls;
  if (!sig.unit_fraction()) {
    cls.verdict = Classification::Verdict::NotCandidate;
    return cls;
  }

  constexpr std::size_t kFailureCap = 32;
  const std::int64_t N = to_i64(sig.N, "N (signature too large to classify)");
  auto candidates = candidate_generators(sig);

  for (const auto& cand : candidates) {
    CandidateFailure fail;
    fail.chosen_i = cand.chosen_i;
    detail::ClassScanner scan(sig);
    for (std::int64_t k = 0; k < N; ++k) {
      if (k > 0) scan.advance();
      Monomial mono;
      mono.exps = scan.a();
      if (!factor_over_generators(mono, cand.gens)) {
        if (fail.failing_k.size() < kFailureCap) fail.failing_k.push_back(k);
        ++fail.total_failures;
        if (fail.failing_k.size() >= kFailureCap) break;  // enough evidence
      }
    }
    if (fail.total_failures == 0) {
      if (!verify_hypersurface_identity(sig, cand.weights, cand.h)) {
        cls.failures.push_back(std::move(fail));
        continue;  // factorization passed but the series identity refuted it
      }
      HypersurfacePresentation pres;
      pres.generators = cand.gens;
      pres.weights = cand.weights;
      pres.h = cand.h;
      pres.chosen_i = cand.chosen_i;
      RelationBuild rel = build_relation(sig, cand);
      pres.relation = std::move(rel.poly);
      pres.relation_display = std::move(rel.display);
      cls.verdict = Classification::Verdict::Hypersurface;
      cls.presentation = std::move(pres);
      return cls;
    }
    cls.failures.push_back(std::move(fail));
  }
  cls.verdict = Classification::Verdict::CandidateRejected;
  return cls;
}

}  // namespace gts

#pragma once

#include "gts/enumeration.hpp"
#include "gts/fixtures.hpp"
#include "gts/record.hpp"
#include "gts/relation_text.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gts {

struct VerifyReport {
  std::vector<std::string> diffs;
  std::size_t table2_rows_checked = 0;
  std::size_t table1_rows_checked = 0;

  bool ok() const { return diffs.empty(); }
};

namespace detail {

inline std::string sig_string(const std::vector<Int>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += p[i].str();
  }
  return out + ")";
}

inline GenPoly apply_permutation(const GenPoly& poly, const std::vector<std::size_t>& perm) {
  GenPoly out;
  for (const auto& t : poly.terms) {
    GenPoly::Term nt;
    nt.coeff = t.coeff;
    nt.exps.assign(t.exps.size(), 0);
    for (std::size_t i = 0; i < t.exps.size(); ++i) nt.exps[perm[i]] = t.exps[i];
    out.terms.push_back(std::move(nt));
  }
  out.normalize();
  return out;
}

/// Equality modulo renaming generators of equal weight.  The tables list
/// generator tuples in an unspecified order within weight ties, so the
/// substitution-invariant object is the polynomial up to those swaps.
inline bool relations_match_up_to_ties(const GenPoly& ours, const GenPoly& fixture,
                                       const std::vector<Int>& weights) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < weights.size();) {
    std::size_t j = i;
    while (j < weights.size() && weights[j] == weights[i]) ++j;
    std::vector<std::size_t> g;
    for (std::size_t t = i; t < j; ++t) g.push_back(t);
    groups.push_back(std::move(g));
    i = j;
  }
  std::vector<std::size_t> perm(weights.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;

  auto try_groups = [&](auto&& self, std::size_t gi) -> bool {
    if (gi == groups.size()) return apply_permutation(fixture, perm) == ours;
    std::vector<std::size_t> order = groups[gi];
    std::sort(order.begin(), order.end());
    do {
      for (std::size_t t = 0; t < order.size(); ++t) perm[groups[gi][t]] = order[t];
      if (self(self, gi + 1)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
  };
  return try_groups(try_groups, 0);
}

}  // namespace detail

/// Recomputes the n = 4 classification and diffs it against fixture rows:
/// signature sets, weight multisets, relation degrees, and expanded relations
/// modulo generator-set ambiguity.
inline void verify_table2(const std::vector<TableRow>& fixture, VerifyReport& report) {
  std::map<std::vector<Int>, const TableRow*> expected;
  for (const auto& row : fixture) {
    std::vector<Int> key(row.signature.begin(), row.signature.end());
    expected[key] = &row;
  }

  auto set = enumerate_candidates(4);
  std::map<std::vector<Int>, Classification> computed;
  for (const auto& sig : set.signatures) {
    auto cls = classify(sig);
    if (cls.is_hypersurface()) computed.emplace(sig.p, std::move(cls));
  }

  for (const auto& [key, row] : expected) {
    auto it = computed.find(key);
    if (it == computed.end()) {
      report.diffs.push_back("table2: " + detail::sig_string(key) +
                             " expected hypersurface, classifier disagrees");
      continue;
    }
    const auto& pres = *it->second.presentation;
    std::vector<Int> want(row->weights.begin(), row->weights.end());
    if (pres.weights != want) {
      report.diffs.push_back("table2: " + detail::sig_string(key) + " weights differ");
      continue;
    }
    if (pres.h != Int(row->h)) {
      report.diffs.push_back("table2: " + detail::sig_string(key) + " relation degree differs");
      continue;
    }
    GenPoly fixture_poly = parse_relation(row->relation, key.size());
    if (!detail::relations_match_up_to_ties(pres.relation, fixture_poly, pres.weights)) {
      report.diffs.push_back("table2: " + detail::sig_string(key) + " relation differs");
      continue;
    }
    ++report.table2_rows_checked;
  }
  for (const auto& [key, cls] : computed)
    if (!expected.count(key))
      report.diffs.push_back("table2: unexpected hypersurface " + detail::sig_string(key));
}

/// Recomputes the n = 3 table with the brute-force engine and diffs
/// signatures, weights and relation degrees.
inline void verify_table1(const std::vector<TableRow>& fixture, VerifyReport& report,
                          const Int& scan_max = 50) {
  std::map<std::vector<Int>, const TableRow*> expected;
  for (const auto& row : fixture) {
    std::vector<Int> key(row.signature.begin(), row.signature.end());
    expected[key] = &row;
  }
  auto rows = classify_n3(scan_max);
  std::map<std::vector<Int>, const N3Row*> computed;
  for (const auto& r : rows) computed[r.sig.p] = &r;

  for (const auto& [key, row] : expected) {
    auto it = computed.find(key);
    if (it == computed.end()) {
      report.diffs.push_back("table1: " + detail::sig_string(key) + " not found by the scan");
      continue;
    }
    std::vector<Int> want(row->weights.begin(), row->weights.end());
    if (it->second->weights != want) {
      report.diffs.push_back("table1: " + detail::sig_string(key) + " weights differ");
      continue;
    }
    if (it->second->h != Int(row->h)) {
      report.diffs.push_back("table1: " + detail::sig_string(key) + " relation degree differs");
      continue;
    }
    ++report.table1_rows_checked;
  }
  for (const auto& [key, row] : computed)
    if (!expected.count(key))
      report.diffs.push_back("table1: unexpected hypersurface " + detail::sig_string(key));
}

inline VerifyReport verify_against_fixtures(const std::vector<TableRow>& t1,
                                            const std::vector<TableRow>& t2,
                                            const Int& scan_max = 50) {
  VerifyReport report;
  verify_table2(t2, report);
  verify_table1(t1, report, scan_max);
  return report;
}

/// Loads {"table1": [...], "table2": [...]} from a JSON fixture document.
inline std::pair<std::vector<TableRow>, std::vector<TableRow>> load_fixture_json(
    const nlohmann::json& j) {
  auto load_rows = [](const nlohmann::json& arr, bool with_relation) {
    std::vector<TableRow> rows;
    for (const auto& r : arr) {
      TableRow row;
      row.signature = r.at("signature").get<std::vector<std::int64_t>>();
      row.weights = r.at("weights").get<std::vector<std::int64_t>>();
      row.h = r.at("h").get<std::int64_t>();
      if (with_relation && r.contains("relation"))
        row.relation = r.at("relation").get<std::string>();
      rows.push_back(std::move(row));
    }
    return rows;
  };
  std::vector<TableRow> t1, t2;
  if (j.contains("table1")) t1 = load_rows(j.at("table1"), false);
  if (j.contains("table2")) t2 = load_rows(j.at("table2"), true);
  return {std::move(t1), std::move(t2)};
}

}  // namespace gts

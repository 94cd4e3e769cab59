#pragma once

#include "gts/isolated.hpp"
#include "gts/oracle.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace gts {

/// Ambient variable names: letters as in the classical tables up to n = 4,
/// X1..Xn beyond.
inline std::vector<std::string> ambient_names(std::size_t n) {
  if (n == 3) return {"X", "Y", "Z"};
  if (n == 4) return {"X", "Y", "Z", "W"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("X" + std::to_string(i));
  return v;
}

inline std::string ambient_monomial_string(const Monomial& mono, std::size_t n) {
  auto names = ambient_names(n);
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < mono.exps.size(); ++i) {
    if (mono.exps[i] == 0) continue;
    if (!first && n > 4) out += "*";
    first = false;
    out += names[i];
    if (mono.exps[i] != 1) out += "^" + std::to_string(mono.exps[i]);
  }
  if (first) out = "1";
  return out;
}

/// One row of tool output; round-trips through the JSON schema.
struct OutputRecord {
  std::vector<Int> signature;
  std::string status;  // "hypersurface" | "rejected" | "not_candidate"
  std::vector<std::string> generators;
  std::vector<Int> weights;
  Int h = 0;
  std::string relation;
  GenPoly relation_expanded;
  bool isolated = false;
  Int a_invariant = 0;
  std::optional<int> chosen_i;  // 1-based index, as in the classification tables
  std::vector<std::tuple<int, int, Int>> pairs;  // 1-based (i, j, gcd)
  std::string note;  // free-form flag, e.g. property-verified-only runs
};

inline OutputRecord make_record(const Signature& sig, const Classification& cls) {
  OutputRecord rec;
  rec.signature = sig.p;
  switch (cls.verdict) {
    case Classification::Verdict::NotCandidate:
      rec.status = "not_candidate";
      break;
    case Classification::Verdict::CandidateRejected:
      rec.status = "rejected";
      break;
    case Classification::Verdict::Hypersurface:
      rec.status = "hypersurface";
      break;
  }
  if (sig.n() >= 4) {
    IsolatednessReport rep = isolatedness(sig, cls);
    rec.isolated = cls.is_hypersurface() && rep.fraction_test;
    for (auto& [i, j, s] : rep.non_isolated_pairs) rec.pairs.emplace_back(i + 1, j + 1, s);
  }
  if (cls.is_hypersurface()) {
    const auto& pres = *cls.presentation;
    for (const auto& g : pres.generators)
      rec.generators.push_back(ambient_monomial_string(g, sig.n()));
    rec.weights = pres.weights;
    rec.h = pres.h;
    rec.relation = pres.relation_display;
    rec.relation_expanded = pres.relation;
    rec.a_invariant = a_invariant(pres.weights, pres.h);
    if (pres.chosen_i) rec.chosen_i = *pres.chosen_i + 1;
  }
  return rec;
}

/// Row for the n = 3 table, produced by the brute-force engine.  A normal
/// surface singularity is automatically isolated.
inline OutputRecord make_n3_record(const N3Row& row) {
  OutputRecord rec;
  rec.signature = row.sig.p;
  rec.status = "hypersurface";
  for (const auto& g : row.generators)
    rec.generators.push_back(ambient_monomial_string(g, row.sig.n()));
  rec.weights = row.weights;
  rec.h = row.h;
  rec.isolated = true;
  rec.a_invariant = a_invariant(row.weights, row.h);
  return rec;
}

namespace detail {

inline std::string join_ints(const std::vector<Int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

inline std::string join_strings(const std::vector<std::string>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace detail

inline nlohmann::json to_json(const OutputRecord& rec) {
  nlohmann::json j;
  j["signature"] = nlohmann::json::array();
  for (const Int& v : rec.signature) j["signature"].push_back(to_i64(v, "signature entry"));
  j["status"] = rec.status;
  j["generators"] = rec.generators;
  j["weights"] = nlohmann::json::array();
  for (const Int& v : rec.weights) j["weights"].push_back(to_i64(v, "weight"));
  j["h"] = to_i64(rec.h, "relation degree");
  j["relation"] = rec.relation;
  j["relation_expanded"] = nlohmann::json::array();
  for (const auto& t : rec.relation_expanded.terms) {
    nlohmann::json term;
    term["coeff"] = to_i64(t.coeff, "relation coefficient");
    term["exps"] = t.exps;
    j["relation_expanded"].push_back(term);
  }
  j["isolated"] = rec.isolated;
  j["a_invariant"] = to_i64(rec.a_invariant, "a-invariant");
  if (rec.chosen_i)
    j["chosen_i"] = *rec.chosen_i;
  else
    j["chosen_i"] = nullptr;
  j["pairs"] = nlohmann::json::array();
  for (auto& [a, b, s] : rec.pairs)
    j["pairs"].push_back({a, b, to_i64(s, "gcd pair order")});
  return j;
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord rec;
  for (const auto& v : j.at("signature")) rec.signature.push_back(Int(v.get<std::int64_t>()));
  rec.status = j.at("status").get<std::string>();
  rec.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& v : j.at("weights")) rec.weights.push_back(Int(v.get<std::int64_t>()));
  rec.h = Int(j.at("h").get<std::int64_t>());
  rec.relation = j.at("relation").get<std::string>();
  for (const auto& t : j.at("relation_expanded")) {
    GenPoly::Term term;
    term.coeff = Int(t.at("coeff").get<std::int64_t>());
    term.exps = t.at("exps").get<std::vector<std::int64_t>>();
    rec.relation_expanded.terms.push_back(std::move(term));
  }
  rec.relation_expanded.normalize();
  rec.isolated = j.at("isolated").get<bool>();
  rec.a_invariant = Int(j.at("a_invariant").get<std::int64_t>());
  if (!j.at("chosen_i").is_null()) rec.chosen_i = j.at("chosen_i").get<int>();
  for (const auto& p : j.at("pairs"))
    rec.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>(),
                           Int(p.at(2).get<std::int64_t>()));
  return rec;
}

inline std::string csv_header() {
  return "signature;status;generators;weights;h;relation;isolated";
}

inline std::string to_csv_row(const OutputRecord& rec) {
  std::string out;
  out += detail::join_ints(rec.signature) + ";";
  out += rec.status + ";";
  out += detail::join_strings(rec.generators) + ";";
  out += detail::join_ints(rec.weights) + ";";
  out += rec.h.str() + ";";
  out += rec.relation + ";";
  out += rec.isolated ? "true" : "false";
  return out;
}

inline std::string to_text_row(const OutputRecord& rec) {
  std::ostringstream os;
  os << std::left << std::setw(18) << ("(" + detail::join_ints(rec.signature) + ")");
  os << std::setw(14) << rec.status;
  if (rec.status == "hypersurface") {
    os << std::setw(24) << ("(" + detail::join_strings(rec.generators) + ")");
    os << std::setw(28) << ("(" + detail::join_ints(rec.weights) + ";" + rec.h.str() + ")");
    os << std::setw(34) << rec.relation;
    os << (rec.isolated ? "isolated" : "non-isolated");
  }
  return os.str();
}

}  // namespace gts

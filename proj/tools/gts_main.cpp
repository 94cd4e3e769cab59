// Command-line frontend for the generalized-triangle-singularity classifier.
//
// Subcommands: enumerate, classify, table1, verify, hilbert.
// Exit codes: 0 success/affirmative, 1 negative verdict or fixture diff,
// 2 usage error, 3 internal certificate failure.

#include "gts/enumeration.hpp"
#include "gts/record.hpp"
#include "gts/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertificate = 3;

std::vector<gts::Int> parse_signature(const std::string& text) {
  std::vector<gts::Int> p;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) throw std::invalid_argument("empty entry in signature");
      for (char d : cur)
        if (!std::isdigit(static_cast<unsigned char>(d)))
          throw std::invalid_argument("signature entries must be positive integers");
      p.emplace_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (p.size() < 3) throw std::invalid_argument("a signature needs at least 3 entries");
  return p;
}

void print_records(const std::vector<gts::OutputRecord>& recs, const std::string& format,
                   const std::string& note) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : recs) arr.push_back(gts::to_json(r));
    std::cout << arr.dump(2) << "\n";
    if (!note.empty()) std::cerr << note << "\n";
  } else if (format == "csv") {
    std::cout << gts::csv_header() << "\n";
    for (const auto& r : recs) std::cout << gts::to_csv_row(r) << "\n";
    if (!note.empty()) std::cerr << note << "\n";
  } else {
    for (const auto& r : recs) std::cout << gts::to_text_row(r) << "\n";
    if (!note.empty()) std::cout << "# " << note << "\n";
  }
}

int cmd_enumerate(int n, const std::string& format, bool include_rejected) {
  if (n == 3) {
    std::cerr << "enumerate requires n >= 4; the n = 3 table is produced by 'table1'\n";
    return kExitUsage;
  }
  if (n < 3) {
    std::cerr << "enumerate requires n >= 4\n";
    return kExitUsage;
  }
  auto set = gts::enumerate_candidates(static_cast<std::size_t>(n));
  std::vector<gts::OutputRecord> recs;
  for (const auto& sig : set.signatures) {
    auto cls = gts::classify(sig);
    if (!cls.is_hypersurface() && !include_rejected) continue;
    recs.push_back(gts::make_record(sig, cls));
  }
  std::string note;
  if (n >= 5)
    note = "n = " + std::to_string(n) +
           " results are property-verified only; no published table covers them";
  print_records(recs, format, note);
  return kExitOk;
}

int cmd_classify(const std::string& sig_text, const std::string& format) {
  auto p = parse_signature(sig_text);
  gts::Signature sig = gts::derive(p);
  gts::OutputRecord rec;
  bool affirmative = false;
  if (sig.n() == 3) {
    if (auto row = gts::classify_n3_signature(sig)) {
      rec = gts::make_n3_record(*row);
      affirmative = true;
    } else {
      rec.signature = sig.p;
      rec.status = "rejected";
    }
  } else {
    auto cls = gts::classify(sig);
    rec = gts::make_record(sig, cls);
    affirmative = cls.is_hypersurface();
  }
  print_records({rec}, format, "");
  return affirmative ? kExitOk : kExitNegative;
}

int cmd_table1(std::int64_t scan_max, const std::string& format) {
  auto rows = gts::classify_n3(scan_max);
  std::vector<gts::OutputRecord> recs;
  recs.reserve(rows.size());
  for (const auto& r : rows) recs.push_back(gts::make_n3_record(r));
  print_records(recs, format, "");
  return kExitOk;
}

int cmd_verify(const std::string& fixture_path, std::int64_t scan_max) {
  std::vector<gts::TableRow> t1 = gts::table1_fixture();
  std::vector<gts::TableRow> t2 = gts::table2_fixture();
  if (!fixture_path.empty()) {
    std::ifstream in(fixture_path);
    if (!in) {
      std::cerr << "cannot read fixture file: " << fixture_path << "\n";
      return kExitUsage;
    }
    nlohmann::json j;
    try {
      in >> j;
      std::tie(t1, t2) = gts::load_fixture_json(j);
    } catch (const std::exception& e) {
      std::cerr << "malformed fixture file: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  gts::VerifyReport report;
  if (!t2.empty()) gts::verify_table2(t2, report);
  if (!t1.empty()) gts::verify_table1(t1, report, scan_max);
  std::cout << "table2: " << report.table2_rows_checked << " rows verified\n";
  std::cout << "table1: " << report.table1_rows_checked << " rows verified\n";
  for (const auto& d : report.diffs) std::cout << "DIFF " << d << "\n";
  return report.ok() ? kExitOk : kExitNegative;
}

int cmd_hilbert(const std::string& sig_text, std::int64_t max_degree, const std::string& format) {
  auto p = parse_signature(sig_text);
  gts::Signature sig = gts::derive(p);
  if (max_degree < 0) {
    std::cerr << "--max-degree must be nonnegative\n";
    return kExitUsage;
  }
  struct Row {
    std::int64_t k;
    gts::Int m, dim;
  };
  std::vector<Row> rows;
  for (std::int64_t k = 0; k <= max_degree; ++k)
    rows.push_back({k, gts::m_value(sig, k), gts::dim_r(sig, k)});

  if (format == "json") {
    nlohmann::json j;
    j["signature"] = nlohmann::json::array();
    for (const auto& v : sig.p) j["signature"].push_back(gts::to_i64(v, "signature entry"));
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"k", r.k},
                           {"m", gts::to_i64(r.m, "m(k)")},
                           {"dim", gts::to_i64(r.dim, "dim")}});
    if (sig.unit_fraction())
      j["fsum_degree"] = gts::to_i64(gts::Int(sig.n() - 1) * sig.N + 1, "fsum degree");
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "k;m;dim\n";
    for (const auto& r : rows)
      std::cout << r.k << ";" << r.m.str() << ";" << r.dim.str() << "\n";
  } else {
    std::cout << "signature " << sig.to_string() << "  N=" << sig.N.str()
              << "  nu=" << sig.nu.str() << "\n";
    std::cout << "   k  m(k)  dim R_k\n";
    for (const auto& r : rows)
      std::cout << std::setw(4) << r.k << "  " << std::setw(4) << r.m.str() << "  "
                << r.dim.str() << "\n";
    if (sig.unit_fraction())
      std::cout << "# unit-fraction candidate: fsum degree is "
                << (gts::Int(sig.n() - 1) * sig.N + 1).str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classifier for hypersurface generalized triangle singularities"};
  app.require_subcommand(1);

  int exit_code = kExitOk;
  std::string format = "text";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  int n = 0;
  bool include_rejected = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate and classify all candidates");
  enumerate->add_option("-n", n, "signature length (>= 4)")->required();
  enumerate->add_flag("--include-rejected", include_rejected,
                      "also print candidates that fail the hypersurface test");
  add_format(enumerate);
  enumerate->callback([&] { exit_code = cmd_enumerate(n, format, include_rejected); });

  std::string sig_text;
  auto* classify = app.add_subcommand("classify", "classify one signature");
  classify->add_option("signature", sig_text, "comma-separated exponents, e.g. 2,3,9,21")
      ->required();
  add_format(classify);
  classify->callback([&] { exit_code = cmd_classify(sig_text, format); });

  std::int64_t scan_max = 50;
  auto* table1 = app.add_subcommand("table1", "the n = 3 hypersurface table");
  table1->add_option("--scan-max", scan_max, "scan bound for the exponents (>= 14)");
  add_format(table1);
  table1->callback([&] { exit_code = cmd_table1(scan_max, format); });

  std::string fixture_path;
  std::int64_t verify_scan_max = 50;
  auto* verify = app.add_subcommand("verify", "recompute and diff against golden tables");
  verify->add_option("--fixture", fixture_path, "JSON fixture file (default: embedded tables)");
  verify->add_option("--scan-max", verify_scan_max, "scan bound for the n = 3 run");
  verify->callback([&] { exit_code = cmd_verify(fixture_path, verify_scan_max); });

  std::string hilbert_sig;
  std::int64_t max_degree = 50;
  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of one signature");
  hilbert->add_option("signature", hilbert_sig, "comma-separated exponents")->required();
  hilbert->add_option("--max-degree", max_degree, "largest degree to print");
  add_format(hilbert);
  hilbert->callback([&] { exit_code = cmd_hilbert(hilbert_sig, max_degree, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
  } catch (const gts::BoundTooSmall& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}

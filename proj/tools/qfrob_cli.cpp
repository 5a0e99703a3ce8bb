// Command-line front end: expand named series, dump the contraction
// tables, run verification suites or single entries, enumerate small
// Frobenius counts, and search for sharpness witnesses.
//
// Exit codes: 0 when nothing is violated, 1 when any verification entry is
// violated, 2 on usage errors or unknown names.  All numbers print as
// exact decimal strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qfrob/congruences.hpp"
#include "qfrob/frobenius.hpp"
#include "qfrob/genfun.hpp"
#include "qfrob/identities.hpp"
#include "qfrob/report.hpp"
#include "qfrob/series.hpp"
#include "qfrob/tables.hpp"
#include "qfrob/theta.hpp"

namespace {

using qfrob::BuildOptions;
using qfrob::Int;
using qfrob::VerificationReport;
using qfrob::VerifyStatus;

constexpr std::int64_t kDefaultN = 3000;

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return 2;
}

bool parse_i64(const std::string& text, std::int64_t& out) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(text, &used);
    if (used != text.size() || text.empty()) return false;
    out = v;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::string join_row(const std::vector<Int>& row, char sep) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += sep;
    out += row[i].get_str();
  }
  return out;
}

int print_reports(const std::vector<VerificationReport>& reports,
                  const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& r : reports)
      arr.push_back(qfrob::report_to_json(r));
    std::cout << arr.dump(1) << '\n';
  } else if (format == "tsv") {
    for (const VerificationReport& r : reports)
      std::cout << qfrob::report_to_tsv(r) << '\n';
  } else {
    for (const VerificationReport& r : reports)
      std::cout << qfrob::report_to_text(r);
  }
  for (const VerificationReport& r : reports)
    if (r.status == VerifyStatus::violated) return 1;
  return 0;
}

/// Merges an optional trailing positional N with --upto.  `pos` is the
/// positional text (empty if absent); returns false on conflict or a
/// malformed/out-of-range value, leaving an explanation in `err`.
bool resolve_n(const std::string& pos, std::int64_t upto, bool upto_set,
               std::optional<std::int64_t>& out, std::string& err) {
  out.reset();
  if (!pos.empty()) {
    std::int64_t v = 0;
    if (!parse_i64(pos, v)) {
      err = "not an integer: '" + pos + "'";
      return false;
    }
    if (upto_set) {
      err = "give the truncation either positionally or via --upto, not both";
      return false;
    }
    out = v;
  } else if (upto_set) {
    out = upto;
  }
  if (out && *out < 2) {
    err = "truncation must be at least 2";
    return false;
  }
  return true;
}

int cmd_expand(const std::vector<std::string>& args, std::int64_t upto,
               bool upto_set, const std::string& format,
               const BuildOptions& opts) {
  if (args.empty() || args.size() > 2)
    return fail_usage("expand needs SERIES-ID [N]");
  const std::string& id = args[0];
  std::optional<std::int64_t> n;
  std::string err;
  if (!resolve_n(args.size() > 1 ? args[1] : "", upto, upto_set, n, err))
    return fail_usage(err);
  const std::int64_t N = n.value_or(kDefaultN);
  if (!qfrob::is_series_id(id))
    return fail_usage("unknown series id '" + id + "'");
  qfrob::LaurentSeries s;
  try {
    s = qfrob::build(id, N, opts);
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  const std::int64_t start = std::min<std::int64_t>(0, s.valuation());
  const std::vector<Int> coeffs = s.window(start, N);
  if (format == "json") {
    nlohmann::json j;
    j["id"] = id;
    j["start"] = start;
    j["coefficients"] = nlohmann::json::array();
    for (const Int& c : coeffs) j["coefficients"].push_back(c.get_str());
    std::cout << j.dump(1) << '\n';
  } else {
    std::cout << join_row(coeffs, format == "tsv" ? '\t' : ' ') << '\n';
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& args, std::int64_t upto,
               bool upto_set, const std::string& family_spec,
               const std::string& format, const BuildOptions& opts) {
  std::string what, pos_n;
  if (!family_spec.empty()) {
    if (args.size() > 1)
      return fail_usage("verify --family takes at most one positional, N");
    if (args.size() == 1) pos_n = args[0];
  } else {
    if (args.empty() || args.size() > 2)
      return fail_usage(
          "verify needs SUITE-OR-ID [N], or --family SPEC [N]");
    what = args[0];
    if (args.size() == 2) pos_n = args[1];
  }
  std::optional<std::int64_t> n;
  std::string err;
  if (!resolve_n(pos_n, upto, upto_set, n, err)) return fail_usage(err);

  std::vector<VerificationReport> reports;
  try {
    if (!family_spec.empty()) {
      qfrob::CongruenceFamily f;
      try {
        f = qfrob::parse_family_spec(family_spec);
      } catch (const std::invalid_argument& e) {
        return fail_usage(e.what());
      }
      reports.push_back(
          qfrob::verify_congruence(f, n.value_or(f.default_N), opts));
    } else if (const auto suite = qfrob::suite_from_name(what)) {
      reports = qfrob::run_suite(*suite, n.value_or(kDefaultN), opts);
    } else if (qfrob::is_identity_id(what)) {
      for (const qfrob::IdentityInfo& info : qfrob::identity_registry())
        if (info.id == what)
          reports.push_back(qfrob::verify_identity(
              what, n.value_or(info.default_N), opts));
    } else if (const qfrob::CongruenceFamily* f =
                   qfrob::find_congruence(what)) {
      reports.push_back(
          qfrob::verify_congruence(*f, n.value_or(f->default_N), opts));
    } else {
      bool is_audit = false;
      for (const std::string& id : qfrob::valuation_audit_ids())
        if (id == what) is_audit = true;
      if (!is_audit)
        return fail_usage("unknown suite or entry '" + what + "'");
      reports.push_back(qfrob::verify_valuation_bounds(what));
    }
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  return print_reports(reports, format);
}

int cmd_tables(const std::vector<std::string>& args,
               const std::string& format) {
  if (args.size() != 3) return fail_usage("tables needs FAMILY ROWS COLS");
  const auto fam = qfrob::table_family_from_name(args[0]);
  if (!fam) return fail_usage("unknown table family '" + args[0] + "'");
  std::int64_t rows = 0, cols = 0;
  if (!parse_i64(args[1], rows) || !parse_i64(args[2], cols) || rows < 1 ||
      cols < 1)
    return fail_usage("ROWS and COLS must be positive integers");
  const auto block = qfrob::table_block(*fam, rows, cols);
  if (format == "json") {
    nlohmann::json j;
    j["family"] = qfrob::to_string(*fam);
    j["rows"] = nlohmann::json::array();
    for (const auto& row : block) {
      nlohmann::json jr = nlohmann::json::array();
      for (const Int& v : row) jr.push_back(v.get_str());
      j["rows"].push_back(jr);
    }
    std::cout << j.dump(1) << '\n';
  } else {
    for (const auto& row : block)
      std::cout << join_row(row, format == "tsv" ? '\t' : ' ') << '\n';
  }
  return 0;
}

int cmd_oracle(const std::vector<std::string>& args, std::int64_t budget,
               const std::string& format) {
  if (args.size() != 2) return fail_usage("oracle needs K N-MAX");
  std::int64_t k = 0, n_max = 0;
  if (!parse_i64(args[0], k) || !parse_i64(args[1], n_max) || k < 1 ||
      n_max < 0)
    return fail_usage("oracle needs K >= 1 and N-MAX >= 0");
  std::vector<Int> counts;
  try {
    for (std::int64_t n = 0; n <= n_max; ++n)
      counts.push_back(qfrob::enumerate_cphi(k, n, budget));
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  if (format == "json") {
    nlohmann::json j;
    j["k"] = k;
    j["counts"] = nlohmann::json::array();
    for (const Int& c : counts) j["counts"].push_back(c.get_str());
    std::cout << j.dump(1) << '\n';
  } else {
    std::cout << join_row(counts, format == "tsv" ? '\t' : ' ') << '\n';
  }
  return 0;
}

int cmd_sharpness(const std::vector<std::string>& args, std::int64_t upto,
                  bool upto_set, const std::string& format,
                  const BuildOptions& opts) {
  std::string id, pos_n;
  if (args.size() > 2) return fail_usage("sharpness needs [FAMILY-ID] [N]");
  if (args.size() == 1) {
    std::int64_t ignored = 0;
    if (parse_i64(args[0], ignored))
      pos_n = args[0];
    else
      id = args[0];
  } else if (args.size() == 2) {
    id = args[0];
    pos_n = args[1];
  }
  std::optional<std::int64_t> n;
  std::string err;
  if (!resolve_n(pos_n, upto, upto_set, n, err)) return fail_usage(err);

  std::vector<const qfrob::CongruenceFamily*> families;
  if (!id.empty()) {
    const qfrob::CongruenceFamily* f = qfrob::find_congruence(id);
    if (!f) return fail_usage("unknown congruence family '" + id + "'");
    if (!f->sharp)
      return fail_usage("family '" + id +
                        "' does not claim a best-possible exponent");
    families.push_back(f);
  } else {
    for (const qfrob::CongruenceFamily& f : qfrob::congruence_registry())
      if (f.sharp) families.push_back(&f);
  }
  std::vector<VerificationReport> reports;
  try {
    for (const qfrob::CongruenceFamily* f : families)
      reports.push_back(
          qfrob::sharpness_check(*f, n.value_or(f->default_N), opts));
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  return print_reports(reports, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact q-series toolkit: colored Frobenius counts, eta-quotient "
      "identities, and congruence verification"};
  app.require_subcommand(1);

  std::string format_expand = "text", format_verify = "json",
              format_tables = "text", format_oracle = "text",
              format_sharp = "json";
  std::int64_t upto = 0;
  std::int64_t lattice_budget = qfrob::kDefaultLatticeBudget;
  std::int64_t oracle_budget = qfrob::kDefaultOracleBudget;
  std::string cache_dir, family_spec;
  bool verify_cache = false;
  std::vector<std::string> args_expand, args_verify, args_tables, args_oracle,
      args_sharp;

  const auto format_check = CLI::IsMember({"json", "tsv", "text"});
  const auto positive = CLI::PositiveNumber;

  CLI::App* expand =
      app.add_subcommand("expand", "Print coefficients of a named series");
  expand->add_option("args", args_expand, "SERIES-ID [N]");
  expand->add_option("--upto", upto, "Truncation (coefficients below N)");
  expand->add_option("--format", format_expand, "json, tsv, or text")
      ->check(format_check);
  expand->add_option("--budget", lattice_budget, "Lattice-route node budget")
      ->check(positive);
  expand->add_option("--cache", cache_dir, "Coefficient cache directory");
  expand->add_flag("--verify-cache", verify_cache,
                   "Recompute and require bit-identical cached series");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a suite (identities, theorems, bounds, all) or one "
                "registry entry");
  verify->add_option("args", args_verify, "SUITE-OR-ID [N]");
  verify->add_option("--upto", upto, "Truncation for the run");
  verify->add_option("--family", family_spec,
                     "Ad-hoc family \"target;A;B;mod=m\"");
  verify->add_option("--format", format_verify, "json, tsv, or text")
      ->check(format_check);
  verify->add_option("--budget", lattice_budget, "Lattice-route node budget")
      ->check(positive);
  verify->add_option("--cache", cache_dir, "Coefficient cache directory");
  verify->add_flag("--verify-cache", verify_cache,
                   "Recompute and require bit-identical cached series");

  CLI::App* tables =
      app.add_subcommand("tables", "Print a block of a contraction table");
  tables->add_option("args", args_tables, "FAMILY ROWS COLS");
  tables->add_option("--format", format_tables, "json, tsv, or text")
      ->check(format_check);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Enumerate k-colored Frobenius counts directly");
  oracle->add_option("args", args_oracle, "K N-MAX");
  oracle->add_option("--budget", oracle_budget, "Enumeration node budget")
      ->check(positive);
  oracle->add_option("--format", format_oracle, "json, tsv, or text")
      ->check(format_check);

  CLI::App* sharpness = app.add_subcommand(
      "sharpness", "Find first indices realizing a family's exact exponent");
  sharpness->add_option("args", args_sharp, "[FAMILY-ID] [N]");
  sharpness->add_option("--upto", upto, "Truncation for the search");
  sharpness->add_option("--format", format_sharp, "json, tsv, or text")
      ->check(format_check);
  sharpness->add_option("--budget", lattice_budget,
                        "Lattice-route node budget")
      ->check(positive);
  sharpness->add_option("--cache", cache_dir, "Coefficient cache directory");
  sharpness->add_flag("--verify-cache", verify_cache,
                      "Recompute and require bit-identical cached series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  BuildOptions opts;
  opts.lattice_budget = lattice_budget;
  opts.cache_dir = cache_dir;
  opts.verify_cache = verify_cache;

  if (app.got_subcommand(expand))
    return cmd_expand(args_expand, upto, expand->count("--upto") > 0,
                      format_expand, opts);
  if (app.got_subcommand(verify))
    return cmd_verify(args_verify, upto, verify->count("--upto") > 0,
                      family_spec, format_verify, opts);
  if (app.got_subcommand(tables)) return cmd_tables(args_tables, format_tables);
  if (app.got_subcommand(oracle))
    return cmd_oracle(args_oracle, oracle_budget, format_oracle);
  if (app.got_subcommand(sharpness))
    return cmd_sharpness(args_sharp, upto, sharpness->count("--upto") > 0,
                         format_sharp, opts);
  return 2;
}

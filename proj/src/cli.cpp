#include "multirank/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "multirank/counting.hpp"
#include "multirank/tables.hpp"
#include "multirank/verify.hpp"
#include "multirank/version.hpp"

namespace multirank {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {
      "multi-over", "multi-pod", "newmulti",     "garvan-1", "garvan-2",
      "reti-cubic", "overcubic", "fourcolor",    "vector-crank", "jtp"};
  return names;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string did_you_mean(const std::string& given,
                         const std::vector<std::string>& candidates) {
  std::string best;
  std::size_t best_d = given.size() + 8;
  for (const std::string& c : candidates) {
    const std::size_t d = edit_distance(given, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  if (best.empty()) return "";
  std::ostringstream os;
  os << " (did you mean '" << best << "'?)";
  return os.str();
}

std::string format_set(const std::set<int>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int a : s) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  os << '}';
  return os.str();
}

struct CommonOptions {
  bool json = false;
  std::string out_path;
};

// Writes the report to --out and/or stdout, returns the pass/fail exit code.
int emit_report(const TheoremReport& report, const CommonOptions& common,
                std::ostream& out) {
  std::ostringstream body;
  if (common.json) {
    body << report.to_json().dump(2) << "\n";
  } else {
    report.write_text(body);
  }
  if (!common.out_path.empty()) {
    std::ofstream file(common.out_path);
    if (!file) throw std::runtime_error("cannot open " + common.out_path);
    file << body.str();
    out << "report written to " << common.out_path << ": "
        << (report.pass ? "pass" : "FAIL") << "\n";
  } else {
    out << body.str();
  }
  return report.pass ? kExitPass : kExitVerificationFailure;
}

int cmd_coeffs(const std::string& family_text, int n_max,
               const CommonOptions& common, std::ostream& out) {
  const std::optional<FamilySpec> family = FamilySpec::parse(family_text);
  if (!family) {
    throw CLI::ValidationError(
        "--family",
        "unknown family '" + family_text + "'" +
            did_you_mean(family_text.substr(0, family_text.find(':')),
                         FamilySpec::kind_names()) +
            "; expected kind[:params], e.g. cubic, colored-over:2, "
            "generalized:1,2,2,2, fourcolor:1,4");
  }
  const IntSeries s = counting_series(*family, static_cast<std::size_t>(n_max));
  std::ostringstream body;
  if (common.json) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["family"] = family->to_string();
    j["n_max"] = n_max;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i <= s.truncation(); ++i) {
      cs.push_back(to_decimal(s[i]));
    }
    j["coefficients"] = std::move(cs);
    body << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i <= s.truncation(); ++i) {
      body << i << " " << to_decimal(s[i]) << "\n";
    }
  }
  if (!common.out_path.empty()) {
    std::ofstream file(common.out_path);
    if (!file) throw std::runtime_error("cannot open " + common.out_path);
    file << body.str();
  } else {
    out << body.str();
  }
  return kExitPass;
}

int cmd_table(int id, bool check, const CommonOptions& common,
              std::ostream& out) {
  bool ok = true;
  std::ostringstream body;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (id == 1) {
    if (check) ok = table1_check();
    for (const PodPairRow& row : table1_golden()) {
      const std::vector<Partition> pair = {row.first, row.second};
      const long r = multirank_rbar(pair);
      body << "(" << to_string(row.first) << " | " << to_string(row.second)
           << ")  rbar=" << r << "\n";
      nlohmann::ordered_json j;
      j["pair"] = {to_string(row.first), to_string(row.second)};
      j["rbar"] = r;
      rows.push_back(std::move(j));
    }
  } else if (id == 2) {
    if (check) ok = table2_check();
    for (const CubicRow& row : table2_golden()) {
      const long r = reti_crank(row.partition);
      body << "{" << to_string(row.partition.red) << " | "
           << to_string(row.partition.blue) << "}  rc=" << r << "\n";
      nlohmann::ordered_json j;
      j["red"] = to_string(row.partition.red);
      j["blue"] = to_string(row.partition.blue);
      j["rc"] = r;
      rows.push_back(std::move(j));
    }
  } else if (id == 3) {
    for (const AijRow& row : table3_golden()) {
      const auto [c, d] = table3_minimal_cd(row.i, row.j);
      const std::set<int> found = search_aij(c, d, 5, 200);
      if (check && found != row.a_set) ok = false;
      body << "(" << row.i << "," << row.j << ")  a=" << format_set(found)
           << "\n";
      nlohmann::ordered_json j;
      j["i"] = row.i;
      j["j"] = row.j;
      j["a"] = found;
      rows.push_back(std::move(j));
    }
  } else {
    throw CLI::ValidationError("table", "table id must be 1, 2 or 3");
  }

  if (common.json) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["table"] = id;
    j["rows"] = std::move(rows);
    if (check) j["check"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << body.str();
    if (check) {
      out << "table " << id << " check: " << (ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  return !check || ok ? kExitPass : kExitVerificationFailure;
}

int cmd_search(int c, int d, int modulus, int n_max, std::ostream& out) {
  std::set<int> result;
  try {
    result = modulus == 5 ? search_aij(c, d, modulus, n_max)
                          : search_general(modulus, c, d, n_max);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--mod", e.what());
  }
  out << "empirical scan, not a theorem: residues a with p(" << modulus
      << "n+a) = 0 mod " << modulus << " through n_max=" << n_max << "\n";
  out << format_set(result) << " (empirical)\n";
  return kExitPass;
}

BaseFamily parse_base_family(const std::string& name) {
  if (name == "plain") return BaseFamily::Plain;
  if (name == "over") return BaseFamily::Over;
  if (name == "pod") return BaseFamily::Pod;
  throw CLI::ValidationError("--family",
                             "family must be plain, over or pod" +
                                 did_you_mean(name, {"plain", "over", "pod"}));
}

int cmd_verify(const std::string& theorem, std::optional<int> t,
               const std::string& family, int c, int d, int n_max,
               int bf_max, const CommonOptions& common, std::ostream& out) {
  // Theorems over a general prime default to the smallest one they admit.
  const int t3 = t.value_or(3);
  const int t5 = t.value_or(5);
  TheoremReport report;
  if (theorem == "multi-over") {
    report = verify_multi_over(t3, n_max, bf_max);
  } else if (theorem == "multi-pod") {
    report = verify_multi_pod(t3, n_max, bf_max);
  } else if (theorem == "newmulti") {
    report = verify_newmulti(t3, parse_base_family(family), n_max, bf_max);
  } else if (theorem == "garvan-1") {
    report = verify_garvan_multipartitions(t5, 1, n_max, bf_max);
  } else if (theorem == "garvan-2") {
    report = verify_garvan_multipartitions(t5, 2, n_max, bf_max);
  } else if (theorem == "reti-cubic") {
    report = verify_reti_cubic(n_max, bf_max);
  } else if (theorem == "overcubic") {
    report = verify_overcubic(n_max, bf_max);
  } else if (theorem == "fourcolor") {
    report = verify_4c(c, d, n_max, bf_max);
  } else if (theorem == "vector-crank") {
    report = verify_vector_crank(t5, n_max);
  } else if (theorem == "jtp") {
    report = verify_jtp(n_max);
  } else {
    throw CLI::ValidationError(
        "theorem", "unknown theorem '" + theorem + "'" +
                       did_you_mean(theorem, theorem_names()));
  }
  return emit_report(report, common, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Partition multirank statistics and congruence verification"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  CommonOptions common;

  // coeffs
  auto* coeffs = app.add_subcommand(
      "coeffs", "Print counting-function coefficients 0..n-max");
  std::string family_text;
  int coeffs_nmax = 20;
  coeffs->add_option("--family", family_text,
                     "family spec, kind[:params] "
                     "(colored-plain|colored-over|colored-pod|cubic|"
                     "overcubic|generalized:c,l,d,m|fourcolor:c,d)")
      ->required();
  coeffs->add_option("--n-max", coeffs_nmax, "truncation bound")
      ->check(CLI::NonNegativeNumber);
  coeffs->add_flag("--json", common.json, "emit JSON");
  coeffs->add_option("--out", common.out_path, "write output to file");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a theorem verification");
  std::string theorem;
  int v_t = 3;
  std::string v_family = "plain";
  int v_c = 1, v_d = 2;
  int v_nmax = 20;
  int v_bfmax = -1;
  verify->add_option("theorem", theorem,
                     "one of: multi-over, multi-pod, newmulti, garvan-1, "
                     "garvan-2, reti-cubic, overcubic, fourcolor, "
                     "vector-crank, jtp")
      ->required();
  verify->add_option("--t", v_t, "prime modulus");
  verify->add_option("--family", v_family, "newmulti family: plain|over|pod");
  verify->add_option("--c", v_c, "four-color divisor c");
  verify->add_option("--d", v_d, "four-color divisor d");
  verify->add_option("--n-max", v_nmax, "largest weight for series checks")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--bf-max", v_bfmax,
                     "brute-force weight ceiling (-1: family default)");
  verify->add_flag("--json", common.json, "emit JSON report");
  verify->add_option("--out", common.out_path, "write the report to file");

  // table
  auto* table = app.add_subcommand("table", "Regenerate a published table");
  int table_id = 0;
  bool table_check = false;
  table->add_option("id", table_id, "table number (1, 2 or 3)")->required();
  table->add_flag("--check", table_check,
                  "compare against the embedded golden values");
  table->add_flag("--json", common.json, "emit JSON");

  // search
  auto* search = app.add_subcommand(
      "search", "Empirical residue scan for generalized partition functions");
  int s_c = 1, s_d = 2, s_mod = 5, s_nmax = 200;
  search->add_option("--c", s_c, "first divisor")->required();
  search->add_option("--d", s_d, "second divisor")->required();
  search->add_option("--mod", s_mod, "prime modulus")->required();
  search->add_option("--n-max", s_nmax, "scan bound")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_copy = args;
  std::vector<const char*> argv;
  argv.push_back("multirank");
  for (const std::string& a : argv_copy) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (coeffs->parsed()) {
      return cmd_coeffs(family_text, coeffs_nmax, common, out);
    }
    if (verify->parsed()) {
      const std::optional<int> t_opt =
          verify->count("--t") > 0 ? std::optional<int>(v_t) : std::nullopt;
      return cmd_verify(theorem, t_opt, v_family, v_c, v_d, v_nmax,
                        v_bfmax, common, out);
    }
    if (table->parsed()) {
      return cmd_table(table_id, table_check, common, out);
    }
    if (search->parsed()) {
      return cmd_search(s_c, s_d, s_mod, s_nmax, out);
    }
    err << "no subcommand given\n";
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << " " << kVersion << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace multirank

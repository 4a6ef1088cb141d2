#include "multirank/verify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "multirank/tables.hpp"
#include "multirank/version.hpp"

namespace multirank {

bool is_qnr(long n, int t) {
  if (!is_odd_prime(t)) throw std::invalid_argument("modulus must be an odd prime");
  long r = n % t;
  if (r < 0) r += t;
  if (r == 0) return false;
  for (long k = 1; k < t; ++k) {
    if ((k * k) % t == r) return false;
  }
  return true;
}

bool Verdict::pass() const {
  if (!applicable) return true;
  auto ok = [](const std::optional<bool>& v) { return !v.has_value() || *v; };
  return ok(classes_equal) && ok(evenness) && ok(divisibility) &&
         ok(vanishing) && ok(routes_agree);
}

int TheoremReport::applicable_count() const {
  return static_cast<int>(std::count_if(
      verdicts.begin(), verdicts.end(),
      [](const Verdict& v) { return v.applicable; }));
}

nlohmann::ordered_json TheoremReport::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["theorem"] = theorem;
  j["params"] = params;
  j["pass"] = pass;
  j["applicable"] = applicable_count();
  j["checked"] = verdicts.size();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Verdict& v : verdicts) {
    nlohmann::ordered_json row;
    if (!v.label.empty()) {
      row["label"] = v.label;
    } else {
      row["n"] = v.n;
    }
    row["applicable"] = v.applicable;
    auto put = [&](const char* key, const std::optional<bool>& val) {
      if (val) row[key] = *val;
    };
    put("classes_equal", v.classes_equal);
    put("evenness", v.evenness);
    put("divisibility", v.divisibility);
    put("vanishing", v.vanishing);
    put("routes_agree", v.routes_agree);
    if (v.counts) {
      nlohmann::ordered_json cs = nlohmann::ordered_json::array();
      for (const Int& c : *v.counts) cs.push_back(to_decimal(c));
      row["counts"] = cs;
    }
    row["pass"] = v.pass();
    rows.push_back(std::move(row));
  }
  j["verdicts"] = std::move(rows);
  return j;
}

void TheoremReport::write_text(std::ostream& os) const {
  os << "theorem " << theorem;
  for (auto& [key, value] : params.items()) {
    os << "  " << key << "=" << value;
  }
  os << "\n";
  for (const Verdict& v : verdicts) {
    if (!v.label.empty()) {
      os << "  " << v.label;
    } else {
      os << "  n=" << v.n;
    }
    if (!v.applicable) {
      os << "  inapplicable\n";
      continue;
    }
    auto show = [&](const char* name, const std::optional<bool>& val) {
      if (val) os << "  " << name << "=" << (*val ? "ok" : "FAIL");
    };
    show("classes", v.classes_equal);
    show("even", v.evenness);
    show("divisible", v.divisibility);
    show("vanishing", v.vanishing);
    show("routes", v.routes_agree);
    if (v.counts) {
      os << "  counts=(";
      for (std::size_t i = 0; i < v.counts->size(); ++i) {
        if (i) os << ",";
        os << to_decimal((*v.counts)[i]);
      }
      os << ")";
    }
    os << (v.pass() ? "" : "  -> FAIL") << "\n";
  }
  os << "RESULT " << (pass ? "pass" : "FAIL") << " (" << applicable_count()
     << " applicable of " << verdicts.size() << " checked)\n";
}

int default_bf_ceiling(const FamilySpec& f) {
  const int s = f.components;
  switch (f.kind) {
    case FamilySpec::Kind::ColoredPlain:
      if (s <= 2) return 25;
      if (s == 3) return 18;
      if (s == 4) return 14;
      if (s == 5) return 12;
      if (s == 6) return 10;
      return 8;
    case FamilySpec::Kind::ColoredOver:
      if (s <= 2) return 16;
      if (s == 3) return 14;
      if (s == 4) return 12;
      return 8;
    case FamilySpec::Kind::ColoredPod:
      if (s <= 2) return 25;
      if (s == 3) return 20;
      if (s == 4) return 16;
      return 10;
    case FamilySpec::Kind::Cubic:
      return 25;
    case FamilySpec::Kind::Overcubic:
      return 16;
    case FamilySpec::Kind::FourColor:
      return 14;
    case FamilySpec::Kind::Generalized:
      return 0;
  }
  return 0;
}

namespace {

bool all_equal(const std::vector<Int>& counts) {
  for (const Int& c : counts) {
    if (c != counts.front()) return false;
  }
  return true;
}

bool all_even(const std::vector<Int>& counts) {
  for (const Int& c : counts) {
    if (!divisible(c, 2)) return false;
  }
  return true;
}

struct DriverConfig {
  FamilySpec family;
  Statistic stat = Statistic::Rbar;
  int t = 3;
  int n_start = 1;
  unsigned long divisor = 0;  // counting-series divisibility to assert
  bool check_even = false;
  // Applicability of weight n.
  std::function<bool(long)> applicable;
};

/// Shared per-n loop: DFT classes + vanishing + divisibility for every
/// applicable n, brute-force agreement up to bf_max.
TheoremReport run_class_driver(std::string theorem,
                               nlohmann::ordered_json params,
                               const DriverConfig& cfg, int n_max,
                               int bf_max) {
  TheoremReport report;
  report.theorem = std::move(theorem);
  report.params = std::move(params);
  report.params["n_max"] = n_max;
  report.params["bf_max"] = bf_max;

  const IntSeries totals = counting_series(cfg.family, n_max);
  const std::vector<ClassCountTable> dft =
      class_counts_dft_range(cfg.family, cfg.stat, cfg.t, n_max);
  const CycSeries at_root =
      rank_gf_at_root(cfg.family, cfg.stat, cfg.t, 1, n_max);
  const std::vector<StatComponent> object_stat =
      object_components(cfg.family, cfg.stat);

  bool pass = true;
  for (long n = cfg.n_start; n <= n_max; ++n) {
    Verdict v;
    v.n = n;
    v.applicable = cfg.applicable(n);
    if (v.applicable) {
      const ClassCountTable& table = dft[static_cast<std::size_t>(n)];
      v.counts = table.counts;
      v.classes_equal = all_equal(table.counts);
      if (cfg.check_even) v.evenness = all_even(table.counts);
      v.divisibility = divisible(totals[static_cast<std::size_t>(n)],
                                 cfg.divisor);
      v.vanishing = at_root[static_cast<std::size_t>(n)].is_zero();
      if (n <= bf_max) {
        const ClassCountTable bf =
            class_counts_bruteforce(object_stat, cfg.t, static_cast<int>(n));
        v.routes_agree = bf.counts == table.counts && bf.total == table.total;
      }
    }
    pass = pass && v.pass();
    report.verdicts.push_back(std::move(v));
  }
  report.pass = pass;
  return report;
}

int resolve_bf(int bf_max, const FamilySpec& f) {
  return bf_max < 0 ? default_bf_ceiling(f) : bf_max;
}

}  // namespace

TheoremReport verify_multi_over(int t, int n_max, int bf_max) {
  if (!is_odd_prime(t)) throw std::invalid_argument("t must be an odd prime");
  DriverConfig cfg;
  cfg.family = FamilySpec::colored_over(t - 1);
  cfg.stat = Statistic::Rbar;
  cfg.t = t;
  cfg.n_start = 1;
  cfg.divisor = 2UL * static_cast<unsigned long>(t);
  cfg.check_even = true;
  cfg.applicable = [t](long n) { return is_qnr(n, t); };
  nlohmann::ordered_json params;
  params["t"] = t;
  return run_class_driver("multi-over", std::move(params), cfg, n_max,
                          resolve_bf(bf_max, cfg.family));
}

TheoremReport verify_multi_pod(int t, int n_max, int bf_max) {
  if (!is_odd_prime(t)) throw std::invalid_argument("t must be an odd prime");
  DriverConfig cfg;
  cfg.family = FamilySpec::colored_pod(t - 1);
  cfg.stat = Statistic::Rbar;
  cfg.t = t;
  cfg.n_start = 0;
  cfg.divisor = static_cast<unsigned long>(t);
  cfg.applicable = [t](long n) { return is_qnr(8 * n + 1, t); };
  nlohmann::ordered_json params;
  params["t"] = t;
  return run_class_driver("multi-pod", std::move(params), cfg, n_max,
                          resolve_bf(bf_max, cfg.family));
}

TheoremReport verify_newmulti(int t, BaseFamily family, int n_max,
                              int bf_max) {
  if (!is_odd_prime(t)) throw std::invalid_argument("t must be an odd prime");
  DriverConfig cfg;
  std::string name;
  switch (family) {
    case BaseFamily::Plain:
      cfg.family = FamilySpec::colored_plain(t);
      cfg.divisor = static_cast<unsigned long>(t);
      name = "plain";
      break;
    case BaseFamily::Over:
      cfg.family = FamilySpec::colored_over(t);
      cfg.divisor = 2UL * static_cast<unsigned long>(t);
      cfg.check_even = true;
      name = "over";
      break;
    case BaseFamily::Pod:
      cfg.family = FamilySpec::colored_pod(t);
      cfg.divisor = static_cast<unsigned long>(t);
      name = "pod";
      break;
  }
  cfg.stat = Statistic::Rstar;
  cfg.t = t;
  cfg.n_start = 1;
  cfg.applicable = [t](long n) { return n % t != 0; };
  nlohmann::ordered_json params;
  params["t"] = t;
  params["family"] = name;
  return run_class_driver("newmulti", std::move(params), cfg, n_max,
                          resolve_bf(bf_max, cfg.family));
}

TheoremReport verify_garvan_multipartitions(int t, int variant, int n_max,
                                            int bf_max) {
  if (!is_odd_prime(t) || t <= 3) {
    throw std::invalid_argument("Garvan multipartition theorems need prime t > 3");
  }
  if (variant != 1 && variant != 2) {
    throw std::invalid_argument("variant must be 1 (t-1, 24n+1) or 2 (t-3, 8n+1)");
  }
  DriverConfig cfg;
  cfg.family = FamilySpec::colored_plain(variant == 1 ? t - 1 : t - 3);
  cfg.stat = Statistic::Rbar;
  cfg.t = t;
  cfg.n_start = 1;
  cfg.divisor = static_cast<unsigned long>(t);
  if (variant == 1) {
    cfg.applicable = [t](long n) { return is_qnr(24 * n + 1, t); };
  } else {
    cfg.applicable = [t](long n) { return is_qnr(8 * n + 1, t); };
  }
  nlohmann::ordered_json params;
  params["t"] = t;
  params["variant"] = variant;
  return run_class_driver(variant == 1 ? "garvan-1" : "garvan-2",
                          std::move(params), cfg, n_max,
                          resolve_bf(bf_max, cfg.family));
}

TheoremReport verify_reti_cubic(int n_max, int bf_max) {
  DriverConfig cfg;
  cfg.family = FamilySpec::cubic();
  cfg.stat = Statistic::RetiCrank;
  cfg.t = 3;
  cfg.n_start = 0;
  cfg.divisor = 3;
  cfg.applicable = [](long n) { return n % 3 == 2; };
  nlohmann::ordered_json params;
  return run_class_driver("reti-cubic", std::move(params), cfg, n_max,
                          resolve_bf(bf_max, cfg.family));
}

TheoremReport verify_overcubic(int n_max, int bf_max) {
  DriverConfig cfg;
  cfg.family = FamilySpec::overcubic();
  cfg.stat = Statistic::RetiCrank;
  cfg.t = 3;
  cfg.n_start = 0;
  cfg.divisor = 6;
  cfg.check_even = true;
  cfg.applicable = [](long n) { return n % 3 == 2; };
  nlohmann::ordered_json params;
  return run_class_driver("overcubic", std::move(params), cfg, n_max,
                          resolve_bf(bf_max, cfg.family));
}

TheoremReport verify_4c(int c, int d, int n_max, int bf_max) {
  const FamilySpec family = FamilySpec::four_color(c, d);
  const std::set<int>& residues =
      table3_aij(family.c % 5, family.d % 5);
  DriverConfig cfg;
  cfg.family = family;
  cfg.stat = Statistic::Rank4c;
  cfg.t = 5;
  cfg.n_start = 0;
  cfg.divisor = 5;
  cfg.applicable = [&residues](long n) {
    return residues.count(static_cast<int>(n % 5)) > 0;
  };
  nlohmann::ordered_json params;
  params["c"] = family.c;
  params["d"] = family.d;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (int a : residues) rs.push_back(a);
  params["residues"] = rs;
  return run_class_driver("fourcolor", std::move(params), cfg, n_max,
                          resolve_bf(bf_max, cfg.family));
}

TheoremReport verify_vector_crank(int t, int n_max) {
  TheoremReport report;
  report.theorem = "vector-crank";
  report.params["t"] = t;
  report.params["n_max"] = n_max;
  const std::vector<long> targets =
      vector_crank_targets(t, static_cast<std::size_t>(n_max));
  const std::vector<long> vanished =
      vector_crank_vanishing(t, static_cast<std::size_t>(n_max));
  std::set<long> ok(vanished.begin(), vanished.end());
  bool pass = true;
  for (long n : targets) {
    Verdict v;
    v.n = n;
    v.vanishing = ok.count(n) > 0;
    pass = pass && v.pass();
    report.verdicts.push_back(std::move(v));
  }
  report.pass = pass;
  return report;
}

TheoremReport verify_jtp(int n_max) {
  TheoremReport report;
  report.theorem = "jtp";
  report.params["n_max"] = n_max;
  const std::size_t N = static_cast<std::size_t>(n_max);
  bool pass = true;

  for (int ca : {1, -1}) {
    for (long ea = 0; ea <= 3; ++ea) {
      for (int cb : {1, -1}) {
        for (long eb = 0; eb <= 3; ++eb) {
          if (ea + eb < 1) continue;
          const Monomial<Int> a{Int(ca), ea};
          const Monomial<Int> b{Int(cb), eb};
          Verdict v;
          std::ostringstream label;
          label << "f(" << (ca < 0 ? "-" : "") << "q^" << ea << ","
                << (cb < 0 ? "-" : "") << "q^" << eb << ")";
          v.label = label.str();
          v.routes_agree = theta_sum(a, b, N) == jtp_product(a, b, N);
          pass = pass && v.pass();
          report.verdicts.push_back(std::move(v));
        }
      }
    }
  }

  {
    // z = 1: sum (-1)^n (2n+1) q^{n(n+1)/2} = (q;q)^3.
    Verdict v;
    v.label = "modified z=1";
    const IntSeries e = pochhammer(q_power(1), 1, N);
    v.routes_agree = jtp_modified_sum(Int(1), N) == e * e * e;
    pass = pass && v.pass();
    report.verdicts.push_back(std::move(v));
  }
  for (auto [t, k] : {std::pair{3, 1}, {5, 1}, {5, 2}}) {
    Verdict v;
    std::ostringstream label;
    label << "modified z=zeta_" << t << "^" << k;
    v.label = label.str();
    const CyclotomicInt z = CyclotomicInt::zeta_power(t, k);
    const CycSeries product =
        to_cyclotomic(pochhammer(q_power(1), 1, N), t) *
        pochhammer(Monomial<CyclotomicInt>{z, 1}, 1L, N) *
        pochhammer(Monomial<CyclotomicInt>{CyclotomicInt::zeta_power(t, -k), 1},
                   1L, N);
    v.routes_agree = jtp_modified_sum(z, N) == product;
    pass = pass && v.pass();
    report.verdicts.push_back(std::move(v));
  }
  report.pass = pass;
  return report;
}

std::set<int> search_aij(int c, int d, int modulus, int N) {
  if (!is_odd_prime(modulus)) {
    throw std::invalid_argument("search modulus must be an odd prime");
  }
  const IntSeries s = counting_series(
      FamilySpec::generalized(std::min(c, d), 2, std::max(c, d), 2),
      static_cast<std::size_t>(N));
  std::set<int> out;
  for (int a = 0; a < modulus; ++a) {
    bool all = true;
    for (int k = a; k <= N; k += modulus) {
      if (!divisible(s[static_cast<std::size_t>(k)],
                     static_cast<unsigned long>(modulus))) {
        all = false;
        break;
      }
    }
    if (all) out.insert(a);
  }
  return out;
}

std::set<int> search_general(int t, int c, int d, int N) {
  if (t == 5) {
    throw std::invalid_argument(
        "t = 5 is the proved four-color case; use search_aij");
  }
  if (!is_odd_prime(t) || t < 7) {
    throw std::invalid_argument("search_general needs a prime t >= 7");
  }
  const IntSeries s = counting_series(
      FamilySpec::generalized(std::min(c, d), t - 3, std::max(c, d), t - 3),
      static_cast<std::size_t>(N));
  std::set<int> out;
  for (int a = 0; a < t; ++a) {
    bool all = true;
    for (int k = a; k <= N; k += t) {
      if (!divisible(s[static_cast<std::size_t>(k)],
                     static_cast<unsigned long>(t))) {
        all = false;
        break;
      }
    }
    if (all) out.insert(a);
  }
  return out;
}

}  // namespace multirank

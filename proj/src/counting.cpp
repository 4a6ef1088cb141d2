#include "multirank/counting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace multirank {

FamilySpec FamilySpec::colored_plain(int s) {
  FamilySpec f;
  f.kind = Kind::ColoredPlain;
  f.components = s;
  return f;
}

FamilySpec FamilySpec::colored_over(int s) {
  FamilySpec f;
  f.kind = Kind::ColoredOver;
  f.components = s;
  return f;
}

FamilySpec FamilySpec::colored_pod(int s) {
  FamilySpec f;
  f.kind = Kind::ColoredPod;
  f.components = s;
  return f;
}

FamilySpec FamilySpec::cubic() {
  FamilySpec f;
  f.kind = Kind::Cubic;
  f.components = 2;
  return f;
}

FamilySpec FamilySpec::overcubic() {
  FamilySpec f;
  f.kind = Kind::Overcubic;
  f.components = 2;
  return f;
}

FamilySpec FamilySpec::generalized(int c, int l, int d, int m) {
  if (c < 1 || d < 1 || l < 0 || m < 0) {
    throw std::invalid_argument("generalized family parameters must be positive");
  }
  FamilySpec f;
  f.kind = Kind::Generalized;
  f.components = l + m;
  f.c = c;
  f.l = l;
  f.d = d;
  f.m = m;
  return f;
}

FamilySpec FamilySpec::four_color(int c, int d) {
  if (c < 1 || d < 1) {
    throw std::invalid_argument("four-color divisors must be positive");
  }
  FamilySpec f;
  f.kind = Kind::FourColor;
  f.components = 4;
  // Swapping the color pairs is a rank-preserving bijection between types
  // (c,d) and (d,c); normalize to c <= d.
  f.c = std::min(c, d);
  f.d = std::max(c, d);
  f.l = f.m = 2;
  return f;
}

std::vector<std::string> FamilySpec::kind_names() {
  return {"colored-plain", "colored-over", "colored-pod", "cubic",
          "overcubic",     "generalized",  "fourcolor"};
}

std::optional<FamilySpec> FamilySpec::parse(const std::string& text) {
  std::string kind = text;
  std::string params;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    kind = text.substr(0, colon);
    params = text.substr(colon + 1);
  }
  std::vector<int> nums;
  if (!params.empty()) {
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) return std::nullopt;
        nums.push_back(v);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
  }
  auto want = [&](std::size_t k) { return nums.size() == k; };
  try {
    if (kind == "colored-plain" && want(1) && nums[0] >= 1)
      return colored_plain(nums[0]);
    if (kind == "colored-over" && want(1) && nums[0] >= 1)
      return colored_over(nums[0]);
    if (kind == "colored-pod" && want(1) && nums[0] >= 1)
      return colored_pod(nums[0]);
    if (kind == "cubic" && want(0)) return cubic();
    if (kind == "overcubic" && want(0)) return overcubic();
    if (kind == "generalized" && want(4))
      return generalized(nums[0], nums[1], nums[2], nums[3]);
    if (kind == "fourcolor" && want(2)) return four_color(nums[0], nums[1]);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ColoredPlain:
      os << "colored-plain:" << components;
      break;
    case Kind::ColoredOver:
      os << "colored-over:" << components;
      break;
    case Kind::ColoredPod:
      os << "colored-pod:" << components;
      break;
    case Kind::Cubic:
      os << "cubic";
      break;
    case Kind::Overcubic:
      os << "overcubic";
      break;
    case Kind::Generalized:
      os << "generalized:" << c << ',' << l << ',' << d << ',' << m;
      break;
    case Kind::FourColor:
      os << "fourcolor:" << c << ',' << d;
      break;
  }
  return os.str();
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::Rbar:
      return "rbar";
    case Statistic::Rstar:
      return "rstar";
    case Statistic::RetiCrank:
      return "rc";
    case Statistic::Rank4c:
      return "r4";
  }
  return "?";
}

namespace {

// One factor of a z-weighted generating function. Parts live in the
// progression first, first+step, ...; the component contributes z^{zweight}
// per part.
struct GfComponent {
  BaseFamily family = BaseFamily::Plain;
  int first = 1;
  int step = 1;
  long zweight = 0;
};

// rbar weights 1..s/2 on the front half, mirrored negative on the back.
std::vector<long> rbar_weights(int s) {
  std::vector<long> w(static_cast<std::size_t>(s), 0);
  for (int k = 1; k <= s / 2; ++k) {
    w[static_cast<std::size_t>(k - 1)] = k;
    w[static_cast<std::size_t>(s - k)] = -k;
  }
  return w;
}

// rstar weights: k on pi_k, -k on pi_{t-k}, 0 on pi_t.
std::vector<long> rstar_weights(int t) {
  std::vector<long> w(static_cast<std::size_t>(t), 0);
  for (int k = 1; k <= (t - 1) / 2; ++k) {
    w[static_cast<std::size_t>(k - 1)] = k;
    w[static_cast<std::size_t>(t - 1 - k)] = -k;
  }
  return w;
}

[[noreturn]] void unsupported() {
  throw std::invalid_argument(
      "unsupported (family, statistic, modulus) combination");
}

// The closed registry of (family, statistic, modulus) combinations with a
// known reduction, resolved to the shape of the reduced right-hand side.
enum class EntryKind {
  OverRbar,      // t-1 overpartition components
  PodRbar,       // t-1 pod components
  PlainRstar,    // t plain components
  OverRstar,
  PodRstar,
  GarvanFull,    // t-1 plain components, rbar
  GarvanShort,   // t-3 plain components, rbar
  CubicRc,
  OvercubicRc,
  FourColorR4,
};

EntryKind classify(const FamilySpec& f, Statistic stat, int t) {
  if (!is_odd_prime(t)) unsupported();
  switch (f.kind) {
    case FamilySpec::Kind::ColoredOver:
      if (stat == Statistic::Rbar && f.components == t - 1)
        return EntryKind::OverRbar;
      if (stat == Statistic::Rstar && f.components == t)
        return EntryKind::OverRstar;
      unsupported();
    case FamilySpec::Kind::ColoredPod:
      if (stat == Statistic::Rbar && f.components == t - 1)
        return EntryKind::PodRbar;
      if (stat == Statistic::Rstar && f.components == t)
        return EntryKind::PodRstar;
      unsupported();
    case FamilySpec::Kind::ColoredPlain:
      if (stat == Statistic::Rstar && f.components == t)
        return EntryKind::PlainRstar;
      if (stat == Statistic::Rbar && t > 3 && f.components == t - 1)
        return EntryKind::GarvanFull;
      if (stat == Statistic::Rbar && t > 3 && f.components == t - 3)
        return EntryKind::GarvanShort;
      unsupported();
    case FamilySpec::Kind::Cubic:
      if (stat == Statistic::RetiCrank && t == 3) return EntryKind::CubicRc;
      unsupported();
    case FamilySpec::Kind::Overcubic:
      if (stat == Statistic::RetiCrank && t == 3)
        return EntryKind::OvercubicRc;
      unsupported();
    case FamilySpec::Kind::FourColor:
      if (stat == Statistic::Rank4c && t == 5) return EntryKind::FourColorR4;
      unsupported();
    case FamilySpec::Kind::Generalized:
      unsupported();
  }
  unsupported();
}

std::vector<GfComponent> gf_components(const FamilySpec& f, Statistic stat,
                                       int t) {
  classify(f, stat, t);  // validates support
  std::vector<GfComponent> out;
  auto colored = [&](BaseFamily fam) {
    const std::vector<long> w = stat == Statistic::Rbar
                                    ? rbar_weights(f.components)
                                    : rstar_weights(f.components);
    for (long wi : w) out.push_back(GfComponent{fam, 1, 1, wi});
  };
  switch (f.kind) {
    case FamilySpec::Kind::ColoredPlain:
      colored(BaseFamily::Plain);
      break;
    case FamilySpec::Kind::ColoredOver:
      colored(BaseFamily::Over);
      break;
    case FamilySpec::Kind::ColoredPod:
      colored(BaseFamily::Pod);
      break;
    case FamilySpec::Kind::Cubic:
      // Odd red parts carry no z; even red parts +1; blue (even) parts -1.
      out.push_back(GfComponent{BaseFamily::Plain, 1, 2, 0});
      out.push_back(GfComponent{BaseFamily::Plain, 2, 2, +1});
      out.push_back(GfComponent{BaseFamily::Plain, 2, 2, -1});
      break;
    case FamilySpec::Kind::Overcubic:
      out.push_back(GfComponent{BaseFamily::Over, 1, 2, 0});
      out.push_back(GfComponent{BaseFamily::Over, 2, 2, +1});
      out.push_back(GfComponent{BaseFamily::Over, 2, 2, -1});
      break;
    case FamilySpec::Kind::FourColor:
      out.push_back(GfComponent{BaseFamily::Plain, f.c, f.c, +1});
      out.push_back(GfComponent{BaseFamily::Plain, f.c, f.c, -1});
      out.push_back(GfComponent{BaseFamily::Plain, f.d, f.d, +1});
      out.push_back(GfComponent{BaseFamily::Plain, f.d, f.d, -1});
      break;
    case FamilySpec::Kind::Generalized:
      unsupported();
  }
  return out;
}

// Plain components of the counting product (z = 1): (first, step) repeated.
std::vector<GfComponent> counting_components(const FamilySpec& f) {
  std::vector<GfComponent> out;
  auto rep = [&](BaseFamily fam, int first, int step, int copies) {
    for (int i = 0; i < copies; ++i)
      out.push_back(GfComponent{fam, first, step, 0});
  };
  switch (f.kind) {
    case FamilySpec::Kind::ColoredPlain:
      rep(BaseFamily::Plain, 1, 1, f.components);
      break;
    case FamilySpec::Kind::ColoredOver:
      rep(BaseFamily::Over, 1, 1, f.components);
      break;
    case FamilySpec::Kind::ColoredPod:
      rep(BaseFamily::Pod, 1, 2, f.components);
      break;
    case FamilySpec::Kind::Cubic:
      rep(BaseFamily::Plain, 1, 1, 1);
      rep(BaseFamily::Plain, 2, 2, 1);
      break;
    case FamilySpec::Kind::Overcubic:
      rep(BaseFamily::Over, 1, 1, 1);
      rep(BaseFamily::Over, 2, 2, 1);
      break;
    case FamilySpec::Kind::Generalized:
    case FamilySpec::Kind::FourColor:
      rep(BaseFamily::Plain, f.c, f.c, f.l);
      rep(BaseFamily::Plain, f.d, f.d, f.m);
      break;
  }
  return out;
}

// One component's generating function with the part-count variable set to
// the given unit (1 for plain counting, zeta^{jw} for rank specialization).
template <typename R>
TruncatedSeries<R> component_gf(const GfComponent& g, const R& z,
                                std::size_t N) {
  const Monomial<R> pos{z, g.first};
  const Monomial<R> neg{-z, g.first};
  switch (g.family) {
    case BaseFamily::Plain:
      return series_invert(pochhammer(pos, static_cast<long>(g.step), N));
    case BaseFamily::Over:
      return pochhammer(neg, static_cast<long>(g.step), N) *
             series_invert(pochhammer(pos, static_cast<long>(g.step), N));
    case BaseFamily::Pod: {
      // Odd parts distinct, even parts free, both counted.
      const Monomial<R> odd{-z, 1};
      const Monomial<R> even{z, 2};
      return pochhammer(odd, 2L, N) * series_invert(pochhammer(even, 2L, N));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

IntSeries counting_series(const FamilySpec& f, std::size_t N) {
  IntSeries out = IntSeries::constant(Int(1), N);
  const Int one(1);
  for (const GfComponent& g : counting_components(f)) {
    out = out * component_gf(g, one, N);
  }
  return out;
}

bool rank_combination_supported(const FamilySpec& f, Statistic stat, int t) {
  try {
    classify(f, stat, t);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<std::pair<FamilySpec, Statistic>> supported_rank_entries(int t) {
  std::vector<std::pair<FamilySpec, Statistic>> out;
  if (!is_odd_prime(t)) return out;
  out.emplace_back(FamilySpec::colored_over(t - 1), Statistic::Rbar);
  out.emplace_back(FamilySpec::colored_pod(t - 1), Statistic::Rbar);
  out.emplace_back(FamilySpec::colored_plain(t), Statistic::Rstar);
  out.emplace_back(FamilySpec::colored_over(t), Statistic::Rstar);
  out.emplace_back(FamilySpec::colored_pod(t), Statistic::Rstar);
  if (t > 3) {
    out.emplace_back(FamilySpec::colored_plain(t - 1), Statistic::Rbar);
    out.emplace_back(FamilySpec::colored_plain(t - 3), Statistic::Rbar);
  }
  if (t == 3) {
    out.emplace_back(FamilySpec::cubic(), Statistic::RetiCrank);
    out.emplace_back(FamilySpec::overcubic(), Statistic::RetiCrank);
  }
  if (t == 5) {
    for (int i = 0; i <= 4; ++i) {
      for (int j = i; j <= 4; ++j) {
        const int c = i == 0 ? 5 : i;
        const int d = j == 0 ? 5 : j;
        out.emplace_back(FamilySpec::four_color(c, d), Statistic::Rank4c);
      }
    }
  }
  return out;
}

CycSeries rank_gf_at_root(const FamilySpec& f, Statistic stat, int t, int j,
                          std::size_t N) {
  classify(f, stat, t);
  if (j % t == 0) {
    throw std::invalid_argument(
        "rank_gf_at_root: j must be nonzero mod t (use counting_series)");
  }
  CycSeries out = CycSeries::constant(CyclotomicInt::from_integer(t, 1), N);
  for (const GfComponent& g : gf_components(f, stat, t)) {
    const CyclotomicInt z =
        CyclotomicInt::zeta_power(t, static_cast<long>(j) * g.zweight);
    out = out * component_gf(g, z, N);
  }
  return out;
}

CycSeries closed_form_rhs(const FamilySpec& f, Statistic stat, int t,
                          std::size_t N) {
  const EntryKind kind = classify(f, stat, t);
  const long T = t;
  auto embed = [&](const IntSeries& s) { return to_cyclotomic(s, t); };
  switch (kind) {
    case EntryKind::OverRbar:
      // (-q^t;q^t) phi(-q) / (q^t;q^t)
      return embed(pochhammer(neg_q_power(T), T, N) *
                   series_invert(pochhammer(q_power(T), T, N)) *
                   theta_sum(neg_q_power(1), neg_q_power(1), N));
    case EntryKind::PodRbar:
      // (-q^t;q^{2t}) psi(-q) / (q^{2t};q^{2t})
      return embed(pochhammer(neg_q_power(T), 2 * T, N) *
                   series_invert(pochhammer(q_power(2 * T), 2 * T, N)) *
                   theta_sum(neg_q_power(1), neg_q_power(3), N));
    case EntryKind::PlainRstar:
      return embed(series_invert(pochhammer(q_power(T), T, N)));
    case EntryKind::OverRstar:
      return embed(pochhammer(neg_q_power(T), T, N) *
                   series_invert(pochhammer(q_power(T), T, N)));
    case EntryKind::PodRstar:
      return embed(pochhammer(neg_q_power(T), 2 * T, N) *
                   series_invert(pochhammer(q_power(2 * T), 2 * T, N)));
    case EntryKind::GarvanFull:
      // (q;q) / (q^t;q^t)
      return embed(pochhammer(q_power(1), 1, N) *
                   series_invert(pochhammer(q_power(T), T, N)));
    case EntryKind::GarvanShort: {
      // (q, z q, z^{-1} q; q) / (q^t;q^t) with z = zeta^{(t-1)/2}, via the
      // modified triple product.
      const CyclotomicInt z = CyclotomicInt::zeta_power(t, (T - 1) / 2);
      return jtp_modified_sum(z, N) *
             embed(series_invert(pochhammer(q_power(T), T, N)));
    }
    case EntryKind::CubicRc:
      // psi(q) / (q^6;q^6)
      return embed(theta_sum(q_power(1), q_power(3), N) *
                   series_invert(pochhammer(q_power(6), 6, N)));
    case EntryKind::OvercubicRc:
      // (-q^6;q^6) phi(q) / (q^6;q^6)
      return embed(pochhammer(neg_q_power(6), 6, N) *
                   series_invert(pochhammer(q_power(6), 6, N)) *
                   theta_sum(q_power(1), q_power(1), N));
    case EntryKind::FourColorR4: {
      // For each divisor x: 1/((zeta q^x; q^x)(zeta^{-1} q^x; q^x)) =
      // jtp_modified_sum(zeta^2) in q^x over (q^{5x}; q^{5x}).
      const CyclotomicInt z2 = CyclotomicInt::zeta_power(5, 2);
      auto side = [&](long x) {
        const CycSeries mj = jtp_modified_sum(z2, N / x);
        return substitute_power(mj, x, N) *
               embed(series_invert(pochhammer(q_power(5 * x), 5 * x, N)));
      };
      return side(f.c) * side(f.d);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<StatComponent> object_components(const FamilySpec& f,
                                             Statistic stat) {
  std::vector<StatComponent> out;
  auto colored = [&](BaseFamily fam) {
    const std::vector<long> w = stat == Statistic::Rbar
                                    ? rbar_weights(f.components)
                                    : rstar_weights(f.components);
    for (long wi : w)
      out.push_back(StatComponent{fam, 1, Measure::Length, wi});
  };
  switch (f.kind) {
    case FamilySpec::Kind::ColoredPlain:
      if (stat != Statistic::Rbar && stat != Statistic::Rstar) unsupported();
      colored(BaseFamily::Plain);
      break;
    case FamilySpec::Kind::ColoredOver:
      if (stat != Statistic::Rbar && stat != Statistic::Rstar) unsupported();
      colored(BaseFamily::Over);
      break;
    case FamilySpec::Kind::ColoredPod:
      if (stat != Statistic::Rbar && stat != Statistic::Rstar) unsupported();
      colored(BaseFamily::Pod);
      break;
    case FamilySpec::Kind::Cubic:
      if (stat != Statistic::RetiCrank) unsupported();
      out.push_back(StatComponent{BaseFamily::Plain, 1, Measure::EvenLength, +1});
      out.push_back(StatComponent{BaseFamily::Plain, 2, Measure::Length, -1});
      break;
    case FamilySpec::Kind::Overcubic:
      if (stat != Statistic::RetiCrank) unsupported();
      out.push_back(StatComponent{BaseFamily::Over, 1, Measure::EvenLength, +1});
      out.push_back(StatComponent{BaseFamily::Over, 2, Measure::Length, -1});
      break;
    case FamilySpec::Kind::FourColor:
      if (stat != Statistic::Rank4c) unsupported();
      out.push_back(StatComponent{BaseFamily::Plain, f.c, Measure::Length, +1});
      out.push_back(StatComponent{BaseFamily::Plain, f.c, Measure::Length, -1});
      out.push_back(StatComponent{BaseFamily::Plain, f.d, Measure::Length, +1});
      out.push_back(StatComponent{BaseFamily::Plain, f.d, Measure::Length, -1});
      break;
    case FamilySpec::Kind::Generalized:
      unsupported();
  }
  return out;
}

std::vector<ClassCountTable> class_counts_dft_range(const FamilySpec& f,
                                                    Statistic stat, int t,
                                                    int n_max) {
  classify(f, stat, t);
  if (n_max < 0) throw std::invalid_argument("negative weight");
  const std::size_t N = static_cast<std::size_t>(n_max);

  // j = 0 reuses the integer counting series; j = 1..t-1 are the root
  // specializations.
  const IntSeries plain = counting_series(f, N);
  std::vector<CycSeries> roots;
  roots.reserve(static_cast<std::size_t>(t - 1));
  for (int j = 1; j < t; ++j) {
    roots.push_back(rank_gf_at_root(f, stat, t, j, N));
  }

  std::vector<ClassCountTable> out;
  out.reserve(N + 1);
  for (int n = 0; n <= n_max; ++n) {
    ClassCountTable table;
    table.modulus = t;
    table.n = n;
    for (int i = 0; i < t; ++i) {
      CyclotomicInt acc = CyclotomicInt::from_integer(t, plain[n]);
      for (int j = 1; j < t; ++j) {
        acc += CyclotomicInt::zeta_power(t, -static_cast<long>(i) * j) *
               roots[static_cast<std::size_t>(j - 1)][n];
      }
      const std::optional<Int> value = acc.as_rational_integer();
      if (!value) {
        throw std::logic_error("DFT inversion produced a non-integer");
      }
      // Division by t is exact by construction; a remainder is a bug.
      table.counts.push_back(exact_div(*value, static_cast<unsigned long>(t)));
      table.total += table.counts.back();
    }
    if (table.total != plain[n]) {
      throw std::logic_error("DFT class counts do not sum to the total");
    }
    out.push_back(std::move(table));
  }
  return out;
}

ClassCountTable class_counts_dft(const FamilySpec& f, Statistic stat, int t,
                                 int n) {
  return class_counts_dft_range(f, stat, t, n).back();
}

std::vector<long> vector_crank_targets(int t, std::size_t N) {
  long start = 0;
  switch (t) {
    case 5: start = 4; break;
    case 7: start = 5; break;
    case 11: start = 6; break;
    default:
      throw std::invalid_argument("vector crank is verified for t in {5,7,11}");
  }
  std::vector<long> out;
  for (long n = start; n <= static_cast<long>(N); n += t) out.push_back(n);
  return out;
}

std::vector<long> vector_crank_vanishing(int t, std::size_t N) {
  const std::vector<long> targets = vector_crank_targets(t, N);
  const Monomial<CyclotomicInt> zq{CyclotomicInt::zeta_power(t, 1), 1};
  const Monomial<CyclotomicInt> zqinv{CyclotomicInt::zeta_power(t, -1), 1};
  const CycSeries F =
      to_cyclotomic(pochhammer(q_power(1), 1, N), t) *
      series_invert(pochhammer(zq, 1L, N) * pochhammer(zqinv, 1L, N));
  std::vector<long> out;
  for (long n : targets) {
    if (F[static_cast<std::size_t>(n)].is_zero()) out.push_back(n);
  }
  return out;
}

}  // namespace multirank

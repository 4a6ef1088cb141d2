#include "multirank/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace multirank {

int weight(const Partition& p) {
  return std::accumulate(p.parts.begin(), p.parts.end(), 0);
}

int length(const Partition& p) { return static_cast<int>(p.parts.size()); }

int even_part_count(const Partition& p) {
  return static_cast<int>(
      std::count_if(p.parts.begin(), p.parts.end(),
                    [](int x) { return x % 2 == 0; }));
}

int weight(const Overpartition& p) {
  int w = 0;
  for (const OverPart& x : p.parts) w += x.size;
  return w;
}

int length(const Overpartition& p) { return static_cast<int>(p.parts.size()); }

int even_part_count(const Overpartition& p) {
  return static_cast<int>(
      std::count_if(p.parts.begin(), p.parts.end(),
                    [](const OverPart& x) { return x.size % 2 == 0; }));
}

bool is_pod(const Partition& p) {
  for (std::size_t i = 1; i < p.parts.size(); ++i) {
    if (p.parts[i] % 2 == 1 && p.parts[i] == p.parts[i - 1]) return false;
  }
  return true;
}

bool is_valid_overpartition(const Overpartition& p) {
  for (std::size_t i = 1; i < p.parts.size(); ++i) {
    const OverPart& a = p.parts[i - 1];
    const OverPart& b = p.parts[i];
    if (a.size < b.size) return false;
    if (a.size == b.size && b.overlined) return false;  // overlined first, one per size
  }
  return true;
}

long dyson_rank(const Partition& p) {
  if (p.parts.empty()) {
    throw std::domain_error("dyson_rank: undefined for the empty partition");
  }
  return p.parts.front() - length(p);
}

std::string to_string(const Partition& p) {
  if (p.parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i > 0) os << ' ';
    os << p.parts[i];
  }
  return os.str();
}

std::string to_string(const Overpartition& p) {
  if (p.parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i > 0) os << ' ';
    os << p.parts[i].size;
    if (p.parts[i].overlined) os << '~';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << to_string(p);
}

std::ostream& operator<<(std::ostream& os, const Overpartition& p) {
  return os << to_string(p);
}

namespace {

void gen_plain(int n, int max_part, int divisor, std::vector<int>& stack,
               std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{stack});
    return;
  }
  int p = std::min(max_part, n);
  p -= p % divisor;
  for (; p >= divisor; p -= divisor) {
    stack.push_back(p);
    gen_plain(n - p, p, divisor, stack, out);
    stack.pop_back();
  }
}

void gen_pod(int n, int max_part, int banned_odd, std::vector<int>& stack,
             std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{stack});
    return;
  }
  for (int p = std::min(max_part, n); p >= 1; --p) {
    if (p % 2 == 1 && p == banned_odd) continue;
    stack.push_back(p);
    gen_pod(n - p, p, p % 2 == 1 ? p : 0, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int divisor) {
  if (n < 0) throw std::invalid_argument("negative weight");
  if (divisor < 1) throw std::invalid_argument("divisor must be positive");
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_plain(n, n, divisor, stack, out);
  return out;
}

std::vector<Partition> enumerate_pods(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_pod(n, n, 0, stack, out);
  return out;
}

std::vector<Overpartition> enumerate_overpartitions(int n, int divisor) {
  std::vector<Overpartition> out;
  for (const Partition& base : enumerate_partitions(n, divisor)) {
    std::vector<int> sizes;  // distinct sizes, descending
    for (int p : base.parts) {
      if (sizes.empty() || sizes.back() != p) sizes.push_back(p);
    }
    const std::size_t m = sizes.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Overpartition op;
      std::size_t idx = 0;
      for (std::size_t si = 0; si < m; ++si) {
        const int size = sizes[si];
        int copies = 0;
        while (idx < base.parts.size() && base.parts[idx] == size) {
          ++copies;
          ++idx;
        }
        if (mask >> si & 1U) {
          op.parts.push_back(OverPart{size, true});
          --copies;
        }
        for (int c = 0; c < copies; ++c) {
          op.parts.push_back(OverPart{size, false});
        }
      }
      out.push_back(std::move(op));
    }
  }
  return out;
}

long multirank_rbar(const std::vector<int>& lengths) {
  const long s = static_cast<long>(lengths.size());
  if (s % 2 != 0) {
    throw std::invalid_argument("multirank_rbar needs an even component count");
  }
  long r = 0;
  for (long k = 1; k <= s / 2; ++k) {
    r += k * (lengths[k - 1] - lengths[s - k]);
  }
  return r;
}

long multirank_rstar(const std::vector<int>& lengths) {
  const long t = static_cast<long>(lengths.size());
  if (t % 2 != 1) {
    throw std::invalid_argument("multirank_rstar needs an odd component count");
  }
  long r = 0;
  for (long k = 1; k <= (t - 1) / 2; ++k) {
    r += k * (lengths[k - 1] - lengths[t - 1 - k]);
  }
  return r;
}

std::vector<Overpartition> toggle_largest(std::vector<Overpartition> tuple) {
  int best_size = 0;
  std::size_t best_comp = tuple.size();
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].parts.empty()) continue;
    // Parts are sorted descending with the overlined copy first among
    // equals, so parts[0] is exactly "the" candidate within a component.
    if (tuple[i].parts[0].size > best_size) {
      best_size = tuple[i].parts[0].size;
      best_comp = i;
    }
  }
  if (best_comp == tuple.size()) {
    throw std::domain_error("toggle_largest: empty multi-overpartition");
  }
  tuple[best_comp].parts[0].overlined = !tuple[best_comp].parts[0].overlined;
  return tuple;
}

long reti_crank(const CubicPartition& p) {
  return even_part_count(p.red) - length(p.blue);
}

long reti_crank(const OvercubicPartition& p) {
  return even_part_count(p.red) - length(p.blue);
}

long rank_4c(const FourColorPartition& p) {
  return length(p.red) - length(p.blue) + length(p.yellow) - length(p.orange);
}

namespace {

template <typename C, typename Enum>
std::vector<std::vector<C>> tuples_of(int s, int n, Enum enumerate_weight) {
  if (s < 1) throw std::invalid_argument("component count must be positive");
  std::vector<std::vector<C>> out;
  std::vector<C> current(static_cast<std::size_t>(s));
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == s - 1) {
      for (C& obj : enumerate_weight(remaining)) {
        current[idx] = std::move(obj);
        out.push_back(current);
      }
      return;
    }
    for (int w = remaining; w >= 0; --w) {
      for (C& obj : enumerate_weight(w)) {
        current[idx] = std::move(obj);
        self(self, idx + 1, remaining - w);
      }
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace

std::vector<std::vector<Partition>> enumerate_plain_tuples(int s, int n) {
  return tuples_of<Partition>(
      s, n, [](int w) { return enumerate_partitions(w); });
}

std::vector<std::vector<Partition>> enumerate_pod_tuples(int s, int n) {
  return tuples_of<Partition>(s, n, [](int w) { return enumerate_pods(w); });
}

std::vector<std::vector<Overpartition>> enumerate_over_tuples(int s, int n) {
  return tuples_of<Overpartition>(
      s, n, [](int w) { return enumerate_overpartitions(w); });
}

std::vector<CubicPartition> enumerate_cubic(int n) {
  std::vector<CubicPartition> out;
  for (int wr = n; wr >= 0; --wr) {
    for (const Partition& red : enumerate_partitions(wr)) {
      for (const Partition& blue : enumerate_partitions(n - wr, 2)) {
        out.push_back(CubicPartition{red, blue});
      }
    }
  }
  return out;
}

std::vector<OvercubicPartition> enumerate_overcubic(int n) {
  std::vector<OvercubicPartition> out;
  for (int wr = n; wr >= 0; --wr) {
    for (const Overpartition& red : enumerate_overpartitions(wr)) {
      for (const Overpartition& blue : enumerate_overpartitions(n - wr, 2)) {
        out.push_back(OvercubicPartition{red, blue});
      }
    }
  }
  return out;
}

std::vector<FourColorPartition> enumerate_fourcolor(int c, int d, int n) {
  if (c < 1 || d < 1) throw std::invalid_argument("divisors must be positive");
  std::vector<FourColorPartition> out;
  for (int wr = n; wr >= 0; --wr) {
    for (const Partition& red : enumerate_partitions(wr, c)) {
      for (int wb = n - wr; wb >= 0; --wb) {
        for (const Partition& blue : enumerate_partitions(wb, c)) {
          for (int wy = n - wr - wb; wy >= 0; --wy) {
            for (const Partition& yellow : enumerate_partitions(wy, d)) {
              for (const Partition& orange :
                   enumerate_partitions(n - wr - wb - wy, d)) {
                out.push_back(FourColorPartition{red, blue, yellow, orange});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force class counting.

namespace {

std::vector<int> measures_at_weight(const StatComponent& sc, int w) {
  std::vector<int> out;
  auto push_partitions = [&](const std::vector<Partition>& objs) {
    out.reserve(objs.size());
    for (const Partition& p : objs) {
      out.push_back(sc.measure == Measure::Length ? length(p)
                                                  : even_part_count(p));
    }
  };
  switch (sc.family) {
    case BaseFamily::Plain:
      push_partitions(enumerate_partitions(w, sc.divisor));
      break;
    case BaseFamily::Pod:
      if (sc.divisor != 1) {
        throw std::invalid_argument("pod components take no divisor");
      }
      push_partitions(enumerate_pods(w));
      break;
    case BaseFamily::Over: {
      const std::vector<Overpartition> objs =
          enumerate_overpartitions(w, sc.divisor);
      out.reserve(objs.size());
      for (const Overpartition& p : objs) {
        out.push_back(sc.measure == Measure::Length ? length(p)
                                                    : even_part_count(p));
      }
      break;
    }
  }
  return out;
}

// counts[r] += number of tuples over components idx.. with total weight
// `remaining` and statistic's partial value `acc`.
void accumulate(const std::vector<std::vector<std::vector<int>>>& tables,
                const std::vector<long>& zweights, std::size_t idx,
                int remaining, long acc, int modulus,
                std::vector<std::uint64_t>& counts) {
  if (idx + 1 == tables.size()) {
    for (int m : tables[idx][static_cast<std::size_t>(remaining)]) {
      long r = (acc + zweights[idx] * m) % modulus;
      if (r < 0) r += modulus;
      ++counts[static_cast<std::size_t>(r)];
    }
    return;
  }
  for (int w = remaining; w >= 0; --w) {
    const std::vector<int>& ms = tables[idx][static_cast<std::size_t>(w)];
    if (ms.empty()) continue;
    for (int m : ms) {
      accumulate(tables, zweights, idx + 1, remaining - w,
                 acc + zweights[idx] * m, modulus, counts);
    }
  }
}

std::vector<std::vector<std::vector<int>>> build_tables(
    const std::vector<StatComponent>& stat, int n) {
  std::vector<std::vector<std::vector<int>>> tables(stat.size());
  for (std::size_t i = 0; i < stat.size(); ++i) {
    tables[i].resize(static_cast<std::size_t>(n) + 1);
    for (int w = 0; w <= n; ++w) {
      tables[i][static_cast<std::size_t>(w)] = measures_at_weight(stat[i], w);
    }
  }
  return tables;
}

ClassCountTable finish_table(std::vector<std::uint64_t> raw, int modulus,
                             int n) {
  ClassCountTable table;
  table.modulus = modulus;
  table.n = n;
  table.counts.reserve(raw.size());
  for (std::uint64_t c : raw) {
    table.counts.emplace_back(static_cast<unsigned long>(c));
    table.total += table.counts.back();
  }
  return table;
}

void validate_stat(const std::vector<StatComponent>& stat, int modulus,
                   int n) {
  if (stat.empty()) throw std::invalid_argument("empty statistic spec");
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (n < 0) throw std::invalid_argument("negative weight");
}

}  // namespace

ClassCountTable class_counts_bruteforce_serial(
    const std::vector<StatComponent>& stat, int modulus, int n) {
  validate_stat(stat, modulus, n);
  const auto tables = build_tables(stat, n);
  std::vector<long> zweights;
  for (const StatComponent& sc : stat) zweights.push_back(sc.zweight);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(modulus), 0);
  accumulate(tables, zweights, 0, n, 0, modulus, counts);
  return finish_table(std::move(counts), modulus, n);
}

ClassCountTable class_counts_bruteforce(const std::vector<StatComponent>& stat,
                                        int modulus, int n) {
  validate_stat(stat, modulus, n);
  const auto tables = build_tables(stat, n);
  std::vector<long> zweights;
  for (const StatComponent& sc : stat) zweights.push_back(sc.zweight);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(modulus), 0);

  if (stat.size() == 1) {
    accumulate(tables, zweights, 0, n, 0, modulus, counts);
    return finish_table(std::move(counts), modulus, n);
  }

  // Split on the first component's weight; each slice fills its own table.
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(counts.size(), 0);
#pragma omp for schedule(dynamic) nowait
    for (int w = 0; w <= n; ++w) {
      for (int m : tables[0][static_cast<std::size_t>(w)]) {
        accumulate(tables, zweights, 1, n - w, zweights[0] * m, modulus,
                   local);
      }
    }
#pragma omp critical
    for (std::size_t r = 0; r < counts.size(); ++r) counts[r] += local[r];
  }
#else
  accumulate(tables, zweights, 0, n, 0, modulus, counts);
#endif
  return finish_table(std::move(counts), modulus, n);
}

}  // namespace multirank

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "multirank/bigint.hpp"

namespace multirank {

/// Weakly decreasing list of positive parts. Also used for pods (odd parts
/// distinct), which are validated rather than typed separately.
struct Partition {
  std::vector<int> parts;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

struct OverPart {
  int size = 0;
  bool overlined = false;

  bool operator==(const OverPart&) const = default;
  auto operator<=>(const OverPart&) const = default;
};

/// Corteel-Lovejoy overpartition: at most one overlined copy per distinct
/// size. Parts are kept sorted by size descending, overlined copy first
/// among equals (display order only).
struct Overpartition {
  std::vector<OverPart> parts;

  bool operator==(const Overpartition&) const = default;
  auto operator<=>(const Overpartition&) const = default;
};

int weight(const Partition& p);
int length(const Partition& p);
int even_part_count(const Partition& p);
int weight(const Overpartition& p);
int length(const Overpartition& p);
int even_part_count(const Overpartition& p);

bool is_pod(const Partition& p);
bool is_valid_overpartition(const Overpartition& p);

/// Largest part minus number of parts; undefined (throws) for the empty
/// partition.
long dyson_rank(const Partition& p);

std::string to_string(const Partition& p);
std::string to_string(const Overpartition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const Overpartition& p);

/// All partitions of n whose parts are multiples of `divisor`, in descending
/// lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int divisor = 1);
/// Partitions of n with odd parts distinct, descending lexicographic.
std::vector<Partition> enumerate_pods(int n);
/// Overpartitions of n with sizes multiples of `divisor`. For each base
/// partition, overline subsets are emitted in increasing bitmask order over
/// the distinct sizes (descending), the unmarked object first.
std::vector<Overpartition> enumerate_overpartitions(int n, int divisor = 1);

// ---------------------------------------------------------------------------
// Tuples (multipartitions). A t-colored object is a vector of components of
// equal family; heterogeneous pairs get their own structs below.

enum class BaseFamily { Plain, Over, Pod };

/// Weighted alternating length sum over an even number s of components:
/// sum_{k=1}^{s/2} k (len_k - len_{s+1-k}).
long multirank_rbar(const std::vector<int>& lengths);
/// Odd component count t, last component unweighted:
/// sum_{k=1}^{(t-1)/2} k (len_k - len_{t-k}).
long multirank_rstar(const std::vector<int>& lengths);

template <typename C>
std::vector<int> component_lengths(const std::vector<C>& comps) {
  std::vector<int> ls;
  ls.reserve(comps.size());
  for (const C& c : comps) ls.push_back(length(c));
  return ls;
}

template <typename C>
long multirank_rbar(const std::vector<C>& comps) {
  return multirank_rbar(component_lengths(comps));
}

template <typename C>
long multirank_rstar(const std::vector<C>& comps) {
  return multirank_rstar(component_lengths(comps));
}

/// Flips the overline flag on the largest part of a multi-overpartition.
/// Ties across components break to the lowest component index; within a
/// component the overlined copy counts as first. Throws if every component
/// is empty.
std::vector<Overpartition> toggle_largest(std::vector<Overpartition> tuple);

/// 2-colored partition: blue parts even. For the overcubic analog both
/// colors are overpartitions.
struct CubicPartition {
  Partition red;
  Partition blue;

  bool operator==(const CubicPartition&) const = default;
};

struct OvercubicPartition {
  Overpartition red;
  Overpartition blue;

  bool operator==(const OvercubicPartition&) const = default;
};

/// 4-colored partition of type (c,d): red/blue parts divisible by c,
/// yellow/orange parts divisible by d.
struct FourColorPartition {
  Partition red, blue, yellow, orange;

  bool operator==(const FourColorPartition&) const = default;
};

/// Number of even red parts minus number of blue parts.
long reti_crank(const CubicPartition& p);
long reti_crank(const OvercubicPartition& p);
/// len(red) - len(blue) + len(yellow) - len(orange).
long rank_4c(const FourColorPartition& p);

/// All t-tuples of the given base family with total weight n, ordered by
/// weight composition (first component weight descending) then per-component
/// enumeration order.
std::vector<std::vector<Partition>> enumerate_plain_tuples(int s, int n);
std::vector<std::vector<Partition>> enumerate_pod_tuples(int s, int n);
std::vector<std::vector<Overpartition>> enumerate_over_tuples(int s, int n);
std::vector<CubicPartition> enumerate_cubic(int n);
std::vector<OvercubicPartition> enumerate_overcubic(int n);
std::vector<FourColorPartition> enumerate_fourcolor(int c, int d, int n);

// ---------------------------------------------------------------------------
// Brute-force class counting. Statistics on tuples decompose as
// sum_i zweight_i * measure_i(component_i), so the counting engine works on
// per-component measure lists obtained by exhaustive enumeration.

enum class Measure { Length, EvenLength };

struct StatComponent {
  BaseFamily family = BaseFamily::Plain;
  int divisor = 1;  // must be 1 for Pod
  Measure measure = Measure::Length;
  long zweight = 0;
};

struct ClassCountTable {
  int modulus = 0;
  int n = 0;
  std::vector<Int> counts;  // index i: statistic == i (mod modulus)
  Int total = 0;

  bool operator==(const ClassCountTable&) const = default;
};

ClassCountTable class_counts_bruteforce(const std::vector<StatComponent>& stat,
                                        int modulus, int n);
/// Reference implementation without the OpenMP split; kept for testing.
ClassCountTable class_counts_bruteforce_serial(
    const std::vector<StatComponent>& stat, int modulus, int n);

}  // namespace multirank

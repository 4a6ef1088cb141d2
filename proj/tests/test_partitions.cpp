#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "multirank/partitions.hpp"

using namespace multirank;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

Overpartition O(std::vector<std::pair<int, bool>> parts) {
  Overpartition p;
  for (auto [size, over] : parts) p.parts.push_back(OverPart{size, over});
  return p;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("plain enumeration") {
  const auto p4 = enumerate_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == P({4}));
  CHECK(p4[1] == P({3, 1}));
  CHECK(p4[2] == P({2, 2}));
  CHECK(p4[3] == P({2, 1, 1}));
  CHECK(p4[4] == P({1, 1, 1, 1}));

  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0)[0] == P({}));

  // divisor 2: only even parts
  const auto e6 = enumerate_partitions(6, 2);
  CHECK(e6.size() == 3);  // 6, 4+2, 2+2+2
  CHECK(enumerate_partitions(5, 2).empty());
}

TEST_CASE("pod enumeration") {
  const auto pods2 = enumerate_pods(2);
  REQUIRE(pods2.size() == 1);
  CHECK(pods2[0] == P({2}));  // 1+1 is excluded

  const auto pods5 = enumerate_pods(5);
  REQUIRE(pods5.size() == 4);
  CHECK(pods5[0] == P({5}));
  CHECK(pods5[1] == P({4, 1}));
  CHECK(pods5[2] == P({3, 2}));
  CHECK(pods5[3] == P({2, 2, 1}));

  // Frozen counts (odd parts distinct): 1,1,1,2,3,4,5,7,10,13,16
  const std::vector<std::size_t> frozen = {1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16};
  for (int n = 0; n <= 10; ++n) {
    CHECK(enumerate_pods(n).size() == frozen[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("pod validity invariant") {
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& p : enumerate_pods(n)) {
      CHECK(is_pod(p));
      CHECK(weight(p) == n);
      CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    }
  }
  CHECK_FALSE(is_pod(P({1, 1})));
  CHECK(is_pod(P({2, 2})));
}

TEST_CASE("overpartition enumeration") {
  const auto o2 = enumerate_overpartitions(2);
  REQUIRE(o2.size() == 4);
  std::set<std::string> seen;
  for (const Overpartition& p : o2) {
    CHECK(is_valid_overpartition(p));
    seen.insert(to_string(p));
  }
  CHECK(seen == std::set<std::string>{"2", "2~", "1 1", "1~ 1"});

  // Frozen overpartition counts 0..10.
  const std::vector<std::size_t> frozen = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
  for (int n = 0; n <= 10; ++n) {
    CHECK(enumerate_overpartitions(n).size() == frozen[static_cast<std::size_t>(n)]);
  }

  // divisor restricts the allowed sizes
  for (const Overpartition& p : enumerate_overpartitions(6, 2)) {
    for (const OverPart& part : p.parts) CHECK(part.size % 2 == 0);
  }
}

TEST_CASE("dyson rank") {
  CHECK(dyson_rank(P({4})) == 3);
  CHECK(dyson_rank(P({1, 1, 1, 1})) == -3);
  CHECK(dyson_rank(P({3, 1})) == 1);
  CHECK_THROWS_AS(dyson_rank(P({})), std::domain_error);
}

TEST_CASE("multirank rbar") {
  CHECK(multirank_rbar(std::vector<Partition>{P({5}), P({})}) == 1);
  CHECK(multirank_rbar(std::vector<Partition>{P({2}), P({2, 1})}) == -1);
  CHECK(multirank_rbar(std::vector<Partition>{P({}), P({})}) == 0);
  CHECK(multirank_rbar(std::vector<Partition>{P({4, 1}), P({})}) == 2);

  // 4 components: weights 1,2,-2,-1
  CHECK(multirank_rbar(std::vector<Partition>{P({1}), P({1, 1}), P({}), P({})}) == 5);

  CHECK_THROWS_AS(multirank_rbar(std::vector<Partition>{P({1})}),
                  std::invalid_argument);
}

TEST_CASE("multirank rstar") {
  CHECK(multirank_rstar(std::vector<Partition>{P({1}), P({}), P({})}) == 1);
  CHECK(multirank_rstar(std::vector<Partition>{P({}), P({1}), P({})}) == -1);
  CHECK(multirank_rstar(std::vector<Partition>{P({}), P({}), P({1})}) == 0);
  CHECK_THROWS_AS(multirank_rstar(std::vector<Partition>{P({1}), P({})}),
                  std::invalid_argument);
}

TEST_CASE("reti crank") {
  CHECK(reti_crank(CubicPartition{P({4, 1}), P({})}) == 1);
  CHECK(reti_crank(CubicPartition{P({1}), P({2, 2})}) == -2);
  CHECK(reti_crank(CubicPartition{P({3}), P({2})}) == -1);
  CHECK(reti_crank(CubicPartition{P({}), P({})}) == 0);

  // Overcubic: overlined parts count too.
  CHECK(reti_crank(OvercubicPartition{O({{4, true}, {1, false}}), O({})}) == 1);
  CHECK(reti_crank(OvercubicPartition{O({{2, true}}), O({{2, true}, {2, false}})}) == -1);
}

TEST_CASE("rank_4c") {
  CHECK(rank_4c(FourColorPartition{P({}), P({}), P({}), P({})}) == 0);
  CHECK(rank_4c(FourColorPartition{P({1}), P({}), P({}), P({})}) == 1);
  CHECK(rank_4c(FourColorPartition{P({1}), P({1}), P({1}), P({1})}) == 0);
}

TEST_CASE("toggle_largest") {
  using Tuple = std::vector<Overpartition>;
  CHECK(toggle_largest(Tuple{O({{2, true}}), O({})}) ==
        Tuple{O({{2, false}}), O({})});
  // Ties break to the lowest component index.
  CHECK(toggle_largest(Tuple{O({{2, false}}), O({{2, false}})}) ==
        Tuple{O({{2, true}}), O({{2, false}})});
  CHECK_THROWS_AS(toggle_largest(Tuple{O({}), O({})}), std::domain_error);
}

TEST_CASE("toggle_largest is a rank-preserving fixed-point-free involution") {
  for (int s = 1; s <= 3; ++s) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& tuple : enumerate_over_tuples(s, n)) {
        const auto flipped = toggle_largest(tuple);
        CHECK(flipped != tuple);
        CHECK(toggle_largest(flipped) == tuple);
        CHECK(component_lengths(flipped) == component_lengths(tuple));
        for (const Overpartition& c : flipped) CHECK(is_valid_overpartition(c));
      }
    }
  }
}

TEST_CASE("component reversal negates rbar") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& tuple : enumerate_pod_tuples(2, n)) {
      auto reversed = tuple;
      std::reverse(reversed.begin(), reversed.end());
      CHECK(multirank_rbar(reversed) == -multirank_rbar(tuple));
    }
    for (const auto& tuple : enumerate_over_tuples(2, n)) {
      auto reversed = tuple;
      std::reverse(reversed.begin(), reversed.end());
      CHECK(multirank_rbar(reversed) == -multirank_rbar(tuple));
    }
  }
}

TEST_CASE("four-color swaps") {
  for (int n = 0; n <= 6; ++n) {
    for (const FourColorPartition& p : enumerate_fourcolor(1, 2, n)) {
      // Swapping within both color pairs negates r4.
      const FourColorPartition within{p.blue, p.red, p.orange, p.yellow};
      CHECK(rank_4c(within) == -rank_4c(p));
      // Swapping the pairs maps type (c,d) to (d,c) preserving r4.
      const FourColorPartition across{p.yellow, p.orange, p.red, p.blue};
      CHECK(rank_4c(across) == rank_4c(p));
    }
  }
}

TEST_CASE("tuple enumeration counts") {
  CHECK(enumerate_pod_tuples(2, 5).size() == 18);   // Table 1
  CHECK(enumerate_over_tuples(2, 2).size() == 12);
  CHECK(enumerate_cubic(5).size() == 12);           // Table 2
  CHECK(enumerate_cubic(2).size() == 3);            // 2r, 1r1r, 2b
  CHECK(enumerate_overcubic(2).size() == 6);
  CHECK(enumerate_plain_tuples(3, 2).size() == 9);
  CHECK(enumerate_fourcolor(1, 1, 1).size() == 4);
  CHECK(enumerate_fourcolor(5, 5, 2).empty());
}

TEST_CASE("brute-force class counts") {
  // Overpartition pairs of 2, rbar mod 3: (4,4,4), total 12.
  const std::vector<StatComponent> over2 = {
      {BaseFamily::Over, 1, Measure::Length, 1},
      {BaseFamily::Over, 1, Measure::Length, -1}};
  const ClassCountTable t1 = class_counts_bruteforce(over2, 3, 2);
  CHECK(t1.counts == std::vector<Int>{Int(4), Int(4), Int(4)});
  CHECK(t1.total == 12);

  // Pod pairs of 2: (1,1,1), total 3.
  const std::vector<StatComponent> pod2 = {
      {BaseFamily::Pod, 1, Measure::Length, 1},
      {BaseFamily::Pod, 1, Measure::Length, -1}};
  const ClassCountTable t2 = class_counts_bruteforce(pod2, 3, 2);
  CHECK(t2.counts == std::vector<Int>{Int(1), Int(1), Int(1)});

  // Cubic partitions of 5, Reti crank mod 3: (4,4,4).
  const std::vector<StatComponent> cubic = {
      {BaseFamily::Plain, 1, Measure::EvenLength, 1},
      {BaseFamily::Plain, 2, Measure::Length, -1}};
  const ClassCountTable t3 = class_counts_bruteforce(cubic, 3, 5);
  CHECK(t3.counts == std::vector<Int>{Int(4), Int(4), Int(4)});
  CHECK(t3.total == 12);

  // Weight 0: the empty tuple has statistic 0.
  const ClassCountTable t0 = class_counts_bruteforce(over2, 3, 0);
  CHECK(t0.counts == std::vector<Int>{Int(1), Int(0), Int(0)});

  CHECK_THROWS_AS(class_counts_bruteforce({}, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(class_counts_bruteforce(over2, 1, 1), std::invalid_argument);
  // Pods take no divisor.
  const std::vector<StatComponent> bad = {
      {BaseFamily::Pod, 2, Measure::Length, 1},
      {BaseFamily::Pod, 1, Measure::Length, -1}};
  CHECK_THROWS_AS(class_counts_bruteforce(bad, 3, 2), std::invalid_argument);
}

TEST_CASE("brute-force engine agrees with direct tuple enumeration") {
  // The measure-table engine against literally iterating materialized
  // tuples.
  auto bucket = [](long value, int modulus, std::vector<Int>& counts) {
    long r = value % modulus;
    if (r < 0) r += modulus;
    counts[static_cast<std::size_t>(r)] += 1;
  };

  const std::vector<StatComponent> over2 = {
      {BaseFamily::Over, 1, Measure::Length, 1},
      {BaseFamily::Over, 1, Measure::Length, -1}};
  for (int n = 0; n <= 8; ++n) {
    std::vector<Int> direct(3, Int(0));
    for (const auto& tuple : enumerate_over_tuples(2, n)) {
      bucket(multirank_rbar(tuple), 3, direct);
    }
    CHECK(class_counts_bruteforce(over2, 3, n).counts == direct);
  }

  const std::vector<StatComponent> cubic = {
      {BaseFamily::Plain, 1, Measure::EvenLength, 1},
      {BaseFamily::Plain, 2, Measure::Length, -1}};
  const std::vector<StatComponent> overcubic = {
      {BaseFamily::Over, 1, Measure::EvenLength, 1},
      {BaseFamily::Over, 2, Measure::Length, -1}};
  const std::vector<StatComponent> fourcolor23 = {
      {BaseFamily::Plain, 2, Measure::Length, 1},
      {BaseFamily::Plain, 2, Measure::Length, -1},
      {BaseFamily::Plain, 3, Measure::Length, 1},
      {BaseFamily::Plain, 3, Measure::Length, -1}};
  for (int n = 0; n <= 9; ++n) {
    std::vector<Int> direct(3, Int(0));
    for (const CubicPartition& cp : enumerate_cubic(n)) {
      bucket(reti_crank(cp), 3, direct);
    }
    CHECK(class_counts_bruteforce(cubic, 3, n).counts == direct);

    std::vector<Int> direct_oc(3, Int(0));
    for (const OvercubicPartition& op : enumerate_overcubic(n)) {
      bucket(reti_crank(op), 3, direct_oc);
    }
    CHECK(class_counts_bruteforce(overcubic, 3, n).counts == direct_oc);

    std::vector<Int> direct_fc(5, Int(0));
    for (const FourColorPartition& fc : enumerate_fourcolor(2, 3, n)) {
      bucket(rank_4c(fc), 5, direct_fc);
    }
    CHECK(class_counts_bruteforce(fourcolor23, 5, n).counts == direct_fc);
  }
}

}  // TEST_SUITE

#include "multirank/tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace multirank {

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

}  // namespace

const std::vector<PodPairRow>& table1_golden() {
  static const std::vector<PodPairRow> rows = {
      {P({5}), P({}), 1},        {P({4, 1}), P({}), 2},
      {P({3, 2}), P({}), 2},     {P({2, 2, 1}), P({}), 3},
      {P({4}), P({1}), 0},       {P({3, 1}), P({1}), 1},
      {P({2, 2}), P({1}), 1},    {P({3}), P({2}), 0},
      {P({2, 1}), P({2}), 1},    {P({2}), P({2, 1}), -1},
      {P({2}), P({3}), 0},       {P({1}), P({2, 2}), -1},
      {P({1}), P({3, 1}), -1},   {P({1}), P({4}), 0},
      {P({}), P({2, 2, 1}), -3}, {P({}), P({3, 2}), -2},
      {P({}), P({4, 1}), -2},    {P({}), P({5}), -1},
  };
  return rows;
}

const std::vector<CubicRow>& table2_golden() {
  static const std::vector<CubicRow> rows = {
      {{P({5}), P({})}, 0},          {{P({4, 1}), P({})}, 1},
      {{P({3, 2}), P({})}, 1},       {{P({3, 1, 1}), P({})}, 0},
      {{P({2, 2, 1}), P({})}, 2},    {{P({2, 1, 1, 1}), P({})}, 1},
      {{P({1, 1, 1, 1, 1}), P({})}, 0},
      {{P({3}), P({2})}, -1},        {{P({2, 1}), P({2})}, 0},
      {{P({1, 1, 1}), P({2})}, -1},  {{P({1}), P({4})}, -1},
      {{P({1}), P({2, 2})}, -2},
  };
  return rows;
}

const std::vector<AijRow>& table3_golden() {
  static const std::vector<AijRow> rows = {
      {0, 0, {1, 2, 3, 4}}, {0, 1, {2, 3, 4}}, {0, 2, {1, 3, 4}},
      {0, 3, {1, 2, 4}},    {0, 4, {1, 2, 3}}, {1, 1, {3, 4}},
      {1, 2, {4}},          {1, 3, {2}},       {1, 4, {2, 3}},
      {2, 2, {1, 3}},       {2, 3, {1, 4}},    {2, 4, {3}},
      {3, 3, {2, 4}},       {3, 4, {1}},       {4, 4, {1, 2}},
  };
  return rows;
}

const std::set<int>& table3_aij(int i, int j) {
  const int a = std::min(i, j);
  const int b = std::max(i, j);
  for (const AijRow& row : table3_golden()) {
    if (row.i == a && row.j == b) return row.a_set;
  }
  throw std::invalid_argument("residue pair outside the 15 published types");
}

std::pair<int, int> table3_minimal_cd(int i, int j) {
  const int c = i == 0 ? 5 : i;
  const int d = j == 0 ? 5 : j;
  return {std::min(c, d), std::max(c, d)};
}

bool table1_check() {
  for (const PodPairRow& row : table1_golden()) {
    if (!is_pod(row.first) || !is_pod(row.second)) return false;
    const std::vector<Partition> pair = {row.first, row.second};
    if (multirank_rbar(pair) != row.multirank) return false;
  }
  // The enumerator must regenerate exactly the published objects.
  std::vector<std::pair<Partition, Partition>> expected;
  for (const PodPairRow& row : table1_golden()) {
    expected.emplace_back(row.first, row.second);
  }
  std::vector<std::pair<Partition, Partition>> actual;
  for (const std::vector<Partition>& tuple : enumerate_pod_tuples(2, 5)) {
    actual.emplace_back(tuple[0], tuple[1]);
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  return expected == actual;
}

bool table2_check() {
  for (const CubicRow& row : table2_golden()) {
    if (reti_crank(row.partition) != row.crank) return false;
  }
  std::vector<std::pair<Partition, Partition>> expected;
  for (const CubicRow& row : table2_golden()) {
    expected.emplace_back(row.partition.red, row.partition.blue);
  }
  std::vector<std::pair<Partition, Partition>> actual;
  for (const CubicPartition& cp : enumerate_cubic(5)) {
    actual.emplace_back(cp.red, cp.blue);
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  return expected == actual;
}

}  // namespace multirank

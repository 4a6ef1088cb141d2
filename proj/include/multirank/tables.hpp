#pragma once

#include <set>
#include <utility>
#include <vector>

#include "multirank/partitions.hpp"

namespace multirank {

/// Published multirank column for the 18 pod pairs of 5, in the published
/// row order.
struct PodPairRow {
  Partition first;
  Partition second;
  long multirank = 0;
};
const std::vector<PodPairRow>& table1_golden();

/// Published Reti-crank column for the 12 cubic partitions of 5.
struct CubicRow {
  CubicPartition partition;
  long crank = 0;
};
const std::vector<CubicRow>& table2_golden();

/// The fifteen (i,j) residue types with their published a_ij sets.
struct AijRow {
  int i = 0;
  int j = 0;
  std::set<int> a_set;
};
const std::vector<AijRow>& table3_golden();

/// Published a_ij set for a residue pair (order-insensitive lookup).
const std::set<int>& table3_aij(int i, int j);

/// Smallest positive (c,d) with c = i, d = j (mod 5) and c <= d.
std::pair<int, int> table3_minimal_cd(int i, int j);

/// Recomputes each golden row's statistic and checks the enumerators produce
/// exactly the published objects.
bool table1_check();
bool table2_check();

}  // namespace multirank

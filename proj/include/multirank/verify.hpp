#pragma once

#include <iosfwd>
#include <optional>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "multirank/counting.hpp"
#include "multirank/partitions.hpp"

namespace multirank {

/// True iff n mod t is nonzero and not a square mod t. Zero is neither a
/// residue nor a nonresidue.
bool is_qnr(long n, int t);

/// Outcome of one checked instance (one n, or one labeled identity).
/// Absent sub-checks were not run for this instance; an inapplicable n is
/// recorded but never counted as a failure.
struct Verdict {
  long n = 0;
  std::string label;
  bool applicable = true;
  std::optional<bool> classes_equal;
  std::optional<bool> evenness;
  std::optional<bool> divisibility;
  std::optional<bool> vanishing;
  std::optional<bool> routes_agree;
  std::optional<std::vector<Int>> counts;

  bool pass() const;
};

struct TheoremReport {
  std::string theorem;
  nlohmann::ordered_json params;
  std::vector<Verdict> verdicts;
  bool pass = false;

  int applicable_count() const;
  nlohmann::ordered_json to_json() const;
  void write_text(std::ostream& os) const;
};

/// Default brute-force weight ceilings; enumeration cost is exponential in
/// the ceiling, series checks extend coverage beyond it.
int default_bf_ceiling(const FamilySpec& f);

// Theorem drivers. Each combines the enumeration route and the
// generating-function route; n_max bounds the series checks and bf_max
// (-1: family default) bounds the exhaustive ones.

/// Multirank classes on (t-1)-component overpartition tuples at QNR n:
/// equal, even, with 2t | count total, and the zeta-coefficient vanishing.
TheoremReport verify_multi_over(int t, int n_max, int bf_max = -1);
/// Pod-tuple analog, applicable when 8n+1 is a QNR mod t.
TheoremReport verify_multi_pod(int t, int n_max, int bf_max = -1);
/// Second multirank on t-component tuples, applicable when t does not
/// divide n; family selects plain, over or pod.
TheoremReport verify_newmulti(int t, BaseFamily family, int n_max,
                              int bf_max = -1);
/// Garvan's multipartition theorems at prime t > 3: variant 1 uses t-1
/// components and the 24n+1 condition, variant 2 uses t-3 and 8n+1.
TheoremReport verify_garvan_multipartitions(int t, int variant, int n_max,
                                            int bf_max = -1);
/// Reti crank classes on cubic partitions of 3n+2.
TheoremReport verify_reti_cubic(int n_max, int bf_max = -1);
/// Overcubic analog: classes equal and even, total divisible by 6.
TheoremReport verify_overcubic(int n_max, int bf_max = -1);
/// Four-color rank classes at 5n+a for the type's registered residues.
TheoremReport verify_4c(int c, int d, int n_max, int bf_max = -1);
/// Coefficient vanishing of (q;q)/((zq;q)(z^{-1}q;q)) at the Ramanujan
/// progressions, t in {5,7,11}.
TheoremReport verify_vector_crank(int t, int n_max);
/// Jacobi triple product: bilateral sums against Pochhammer products for
/// every small monomial pair, plus the modified identity at several units.
TheoremReport verify_jtp(int n_max);

/// Residues a mod `modulus` such that every computed coefficient
/// p_{[c^2 d^2]}(k) with k <= N and k = a (mod modulus) is divisible by the
/// modulus. Purely empirical.
std::set<int> search_aij(int c, int d, int modulus, int N);
/// The conjectured generalization for prime t >= 7: same scan on
/// p_{[c^{t-3} d^{t-3}]}. t = 5 is rejected (that case is a theorem).
std::set<int> search_general(int t, int c, int d, int N);

}  // namespace multirank

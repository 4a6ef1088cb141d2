#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multirank/cyclotomic.hpp"
#include "multirank/partitions.hpp"
#include "multirank/series.hpp"

namespace multirank {

/// A counting family: which product of Pochhammer reciprocals generates it.
struct FamilySpec {
  enum class Kind {
    ColoredPlain,  // 1/(q;q)^s
    ColoredOver,   // ((-q;q)/(q;q))^s
    ColoredPod,    // ((-q;q^2)/(q^2;q^2))^s
    Cubic,         // 1/((q;q)(q^2;q^2))
    Overcubic,     // (-q;q)(-q^2;q^2)/((q;q)(q^2;q^2))
    Generalized,   // 1/((q^c;q^c)^l (q^d;q^d)^m)
    FourColor,     // Generalized with l = m = 2, carrying the rank structure
  };

  Kind kind = Kind::ColoredPlain;
  int components = 1;           // s for the colored kinds
  int c = 1, l = 2, d = 1, m = 2;  // Generalized / FourColor parameters

  static FamilySpec colored_plain(int s);
  static FamilySpec colored_over(int s);
  static FamilySpec colored_pod(int s);
  static FamilySpec cubic();
  static FamilySpec overcubic();
  static FamilySpec generalized(int c, int l, int d, int m);
  static FamilySpec four_color(int c, int d);

  /// Compact flag grammar: "cubic", "colored-over:2", "generalized:1,2,2,2"
  /// (c,l,d,m), "fourcolor:1,4".
  static std::optional<FamilySpec> parse(const std::string& text);
  static std::vector<std::string> kind_names();
  std::string to_string() const;

  bool operator==(const FamilySpec&) const = default;
};

enum class Statistic { Rbar, Rstar, RetiCrank, Rank4c };

std::string to_string(Statistic s);

/// Coefficients 0..N of the family's counting function, over Z.
IntSeries counting_series(const FamilySpec& f, std::size_t N);

/// True when the (family, statistic, modulus) combination is in the closed
/// registry of root-of-unity reductions this library implements.
bool rank_combination_supported(const FamilySpec& f, Statistic stat, int t);

/// All supported (family, statistic) registry entries for the given prime.
std::vector<std::pair<FamilySpec, Statistic>> supported_rank_entries(int t);

/// The rank generating function specialized at z = zeta_t^j, as a
/// cyclotomic-coefficient series, built from the per-component products.
/// j must be nonzero mod t (the j = 0 evaluation is counting_series).
CycSeries rank_gf_at_root(const FamilySpec& f, Statistic stat, int t, int j,
                          std::size_t N);

/// The reduced right-hand side of the same specialization: theta functions
/// and t-dilated Pochhammer products. Computed along an independent route
/// from rank_gf_at_root.
CycSeries closed_form_rhs(const FamilySpec& f, Statistic stat, int t,
                          std::size_t N);

/// Object-level statistic decomposition for the brute-force route.
std::vector<StatComponent> object_components(const FamilySpec& f,
                                             Statistic stat);

/// Class counts recovered analytically: evaluate the rank GF at every
/// zeta_t^j, invert the DFT exactly over Z[zeta_t]. A non-integer inversion
/// result signals an implementation bug and throws std::logic_error.
ClassCountTable class_counts_dft(const FamilySpec& f, Statistic stat, int t,
                                 int n);
/// Tables for all n = 0..n_max, sharing one series evaluation per root.
std::vector<ClassCountTable> class_counts_dft_range(const FamilySpec& f,
                                                    Statistic stat, int t,
                                                    int n_max);

/// Expands (q;q)/((zeta_t q;q)(zeta_t^{-1} q;q)) over Z[zeta_t] and returns
/// the n in the Ramanujan progression (5n+4 / 7n+5 / 11n+6) up to N whose
/// coefficient vanishes. t must be 5, 7 or 11.
std::vector<long> vector_crank_vanishing(int t, std::size_t N);
/// The full progression being tested, for comparison with the result above.
std::vector<long> vector_crank_targets(int t, std::size_t N);

}  // namespace multirank

#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "multirank/bigint.hpp"
#include "multirank/series.hpp"

namespace multirank {

bool is_odd_prime(long t);

/// Element of Z[zeta_t] for an odd prime t, stored in the power basis
/// 1, zeta, ..., zeta^{t-2}. The representation is canonical: zeta^{t-1} is
/// eagerly rewritten as -(1 + zeta + ... + zeta^{t-2}), so equality is
/// coordinate-wise and "is this zero" is a trivial check.
class CyclotomicInt {
 public:
  static CyclotomicInt zero(int t);
  static CyclotomicInt from_integer(int t, Int value);
  /// Canonical form of zeta_t^k, any integer k (reduced mod t).
  static CyclotomicInt zeta_power(int t, long k);

  int order() const { return order_; }
  const std::vector<Int>& coords() const { return coords_; }

  bool is_zero() const;
  /// The value as an ordinary integer if it lies in Z, otherwise empty.
  std::optional<Int> as_rational_integer() const;

  /// Galois conjugate zeta -> zeta^j; j must be coprime to the order.
  CyclotomicInt conjugate(long j) const;

  /// Inverse when the element is a unit of Z[zeta_t], computed from the
  /// product of conjugates (the norm of a unit is +-1); empty otherwise.
  std::optional<CyclotomicInt> invert_unit() const;

  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& rhs);
  CyclotomicInt& operator-=(const CyclotomicInt& rhs);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) {
    a += b;
    return a;
  }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) {
    a -= b;
    return a;
  }
  friend CyclotomicInt operator*(const CyclotomicInt& a,
                                 const CyclotomicInt& b);

  bool operator==(const CyclotomicInt&) const = default;

 private:
  CyclotomicInt(int t, std::vector<Int> coords);

  int order_ = 0;            // the prime t
  std::vector<Int> coords_;  // length t-1
};

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& v);

template <>
struct ring_traits<CyclotomicInt> {
  static CyclotomicInt zero_like(const CyclotomicInt& x) {
    return CyclotomicInt::zero(x.order());
  }
  static CyclotomicInt one_like(const CyclotomicInt& x) {
    return CyclotomicInt::from_integer(x.order(), 1);
  }
  static bool is_zero(const CyclotomicInt& x) { return x.is_zero(); }
  static std::optional<CyclotomicInt> invert_unit(const CyclotomicInt& x) {
    return x.invert_unit();
  }
};

using CycSeries = TruncatedSeries<CyclotomicInt>;

/// Embed an integer-coefficient series into Z[zeta_t].
CycSeries to_cyclotomic(const IntSeries& s, int t);

/// Checks prod_{j=0}^{t-1} (zeta_t^j q; q)_inf = (q^t; q^t)_inf as truncated
/// series over Z[zeta_t], through q^N.
bool cyclotomic_factorization_check(int t, std::size_t N);

}  // namespace multirank

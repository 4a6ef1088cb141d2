#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace multirank {

/// Arbitrary-precision integer. Every coefficient in this library is exact;
/// partition counts overflow 64-bit words well inside the ranges we verify.
using Int = mpz_class;

/// Minimal ring interface used by the generic series code. Specialized for
/// Int here and for CyclotomicInt in cyclotomic.hpp.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<Int> {
  static Int zero_like(const Int&) { return Int(0); }
  static Int one_like(const Int&) { return Int(1); }
  static bool is_zero(const Int& x) { return sgn(x) == 0; }

  // Units of Z are +1 and -1, each its own inverse.
  static std::optional<Int> invert_unit(const Int& x) {
    if (x == 1 || x == -1) return x;
    return std::nullopt;
  }
};

inline bool divisible(const Int& value, unsigned long modulus) {
  return mpz_divisible_ui_p(value.get_mpz_t(), modulus) != 0;
}

/// Quotient value / divisor, throwing if the division is not exact.
inline Int exact_div(const Int& value, unsigned long divisor) {
  if (!divisible(value, divisor)) {
    throw std::logic_error("exact_div: division is not exact");
  }
  Int q;
  mpz_divexact_ui(q.get_mpz_t(), value.get_mpz_t(), divisor);
  return q;
}

inline std::string to_decimal(const Int& value) { return value.get_str(); }

}  // namespace multirank

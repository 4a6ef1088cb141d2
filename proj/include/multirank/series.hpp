#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "multirank/bigint.hpp"

namespace multirank {

/// coeff * q^exponent. The coefficient is a unit of the ring whenever the
/// monomial seeds a Pochhammer factor or a theta argument.
template <typename R>
struct Monomial {
  R coeff;
  long exponent = 1;
};

inline Monomial<Int> q_power(long e) { return Monomial<Int>{Int(1), e}; }
inline Monomial<Int> neg_q_power(long e) { return Monomial<Int>{Int(-1), e}; }

/// Dense formal power series in q, exact through q^truncation. Immutable in
/// spirit: operations return new values and never re-truncate implicitly.
template <typename R>
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t truncation, const R& zero)
      : coeffs_(truncation + 1, zero) {}

  static TruncatedSeries constant(const R& value, std::size_t truncation) {
    TruncatedSeries s(truncation, ring_traits<R>::zero_like(value));
    s.coeffs_[0] = value;
    return s;
  }

  std::size_t truncation() const { return coeffs_.size() - 1; }

  const R& operator[](std::size_t i) const { return coeffs_[i]; }
  R& coeff(std::size_t i) { return coeffs_.at(i); }
  const std::vector<R>& coeffs() const { return coeffs_; }
  std::vector<R>& coeffs() { return coeffs_; }

  R zero_element() const { return ring_traits<R>::zero_like(coeffs_[0]); }
  R one_element() const { return ring_traits<R>::one_like(coeffs_[0]); }

  bool is_zero() const {
    for (const R& c : coeffs_) {
      if (!ring_traits<R>::is_zero(c)) return false;
    }
    return true;
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<R> coeffs_;
};

namespace detail {

inline void require_same_truncation(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("series operands have mismatched truncation");
  }
}

/// Reference Cauchy-product kernel: out[k] = sum_{i+j=k} a[i] b[j].
template <typename R>
void convolve_serial(const std::vector<R>& a, const std::vector<R>& b,
                     std::vector<R>& out) {
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    R acc = ring_traits<R>::zero_like(out[k]);
    for (std::size_t i = 0; i <= k; ++i) {
      if (ring_traits<R>::is_zero(a[i]) || ring_traits<R>::is_zero(b[k - i]))
        continue;
      acc += a[i] * b[k - i];
    }
    out[k] = std::move(acc);
  }
}

/// OpenMP kernel: output coefficients are independent, so the k-loop is a
/// plain data-parallel loop. Work per k grows linearly, hence guided
/// scheduling.
template <typename R>
void convolve_parallel(const std::vector<R>& a, const std::vector<R>& b,
                       std::vector<R>& out) {
#ifdef _OPENMP
  const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(guided)
  for (long k = 0; k < n; ++k) {
    R acc = ring_traits<R>::zero_like(out[k]);
    for (long i = 0; i <= k; ++i) {
      if (ring_traits<R>::is_zero(a[i]) || ring_traits<R>::is_zero(b[k - i]))
        continue;
      acc += a[i] * b[k - i];
    }
    out[k] = std::move(acc);
  }
#else
  convolve_serial(a, b, out);
#endif
}

// Below this size the parallel kernel's fork/join overhead dominates.
inline constexpr std::size_t kParallelMulThreshold = 192;

template <typename R>
R ring_pow(R base, unsigned long e, const R& one) {
  R result = one;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace detail

template <typename R>
TruncatedSeries<R> multiply_serial(const TruncatedSeries<R>& a,
                                   const TruncatedSeries<R>& b) {
  detail::require_same_truncation(a.truncation(), b.truncation());
  TruncatedSeries<R> out(a.truncation(), a.zero_element());
  detail::convolve_serial(a.coeffs(), b.coeffs(), out.coeffs());
  return out;
}

template <typename R>
TruncatedSeries<R> multiply_parallel(const TruncatedSeries<R>& a,
                                     const TruncatedSeries<R>& b) {
  detail::require_same_truncation(a.truncation(), b.truncation());
  TruncatedSeries<R> out(a.truncation(), a.zero_element());
  detail::convolve_parallel(a.coeffs(), b.coeffs(), out.coeffs());
  return out;
}

template <typename R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a,
                             const TruncatedSeries<R>& b) {
  detail::require_same_truncation(a.truncation(), b.truncation());
  TruncatedSeries<R> out = a;
  for (std::size_t i = 0; i <= out.truncation(); ++i) out.coeff(i) += b[i];
  return out;
}

template <typename R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a,
                             const TruncatedSeries<R>& b) {
  detail::require_same_truncation(a.truncation(), b.truncation());
  TruncatedSeries<R> out = a;
  for (std::size_t i = 0; i <= out.truncation(); ++i) out.coeff(i) -= b[i];
  return out;
}

template <typename R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a) {
  TruncatedSeries<R> out = a;
  for (std::size_t i = 0; i <= out.truncation(); ++i)
    out.coeff(i) = -out.coeff(i);
  return out;
}

template <typename R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a,
                             const TruncatedSeries<R>& b) {
  if (a.truncation() + 1 >= detail::kParallelMulThreshold) {
    return multiply_parallel(a, b);
  }
  return multiply_serial(a, b);
}

/// Multiplicative inverse through the shared truncation bound. The constant
/// coefficient must be a unit of the ring.
template <typename R>
TruncatedSeries<R> series_invert(const TruncatedSeries<R>& a) {
  auto inv0 = ring_traits<R>::invert_unit(a[0]);
  if (!inv0) {
    throw std::domain_error("series_invert: constant coefficient is not a unit");
  }
  const std::size_t n = a.truncation();
  TruncatedSeries<R> out(n, a.zero_element());
  out.coeff(0) = *inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    R acc = a.zero_element();
    for (std::size_t i = 1; i <= k; ++i) {
      if (ring_traits<R>::is_zero(a[i])) continue;
      acc += a[i] * out[k - i];
    }
    out.coeff(k) = -(*inv0 * acc);
  }
  return out;
}

/// Expansion of prod_{k>=0} (1 - head.coeff * ratio.coeff^k *
/// q^{head.exponent + k*ratio.exponent}) through q^N. Factors whose exponent
/// exceeds N contribute nothing and are skipped.
template <typename R>
TruncatedSeries<R> pochhammer(const Monomial<R>& head,
                              const Monomial<R>& ratio, std::size_t N) {
  if (ratio.exponent <= 0) {
    throw std::invalid_argument("pochhammer: step must be positive");
  }
  if (head.exponent < 0 || head.exponent + ratio.exponent < 1) {
    throw std::invalid_argument("pochhammer: leading exponent out of range");
  }
  const R zero = ring_traits<R>::zero_like(head.coeff);
  TruncatedSeries<R> out(N, zero);
  out.coeff(0) = ring_traits<R>::one_like(head.coeff);

  R c = head.coeff;
  long e = head.exponent;
  std::vector<R>& coeffs = out.coeffs();
  while (e <= static_cast<long>(N)) {
    if (e == 0) {
      // Constant factor (1 - c) scales the whole series.
      R factor = ring_traits<R>::one_like(c);
      factor -= c;
      for (R& x : coeffs) x = x * factor;
    } else {
      for (long i = static_cast<long>(N); i >= e; --i) {
        if (ring_traits<R>::is_zero(coeffs[i - e])) continue;
        coeffs[i] -= c * coeffs[i - e];
      }
    }
    c = c * ratio.coeff;
    e += ratio.exponent;
  }
  return out;
}

/// (a; q^step)_infinity with a = head: the ratio monomial carries no
/// coefficient.
template <typename R>
TruncatedSeries<R> pochhammer(const Monomial<R>& head, long step,
                              std::size_t N) {
  return pochhammer(
      head, Monomial<R>{ring_traits<R>::one_like(head.coeff), step}, N);
}

/// Ramanujan's theta f(a,b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2} as a bilateral
/// sum, truncated at q^N. Requires a.exponent + b.exponent >= 1 so the
/// exponents grow without bound in both directions.
template <typename R>
TruncatedSeries<R> theta_sum(const Monomial<R>& a, const Monomial<R>& b,
                             std::size_t N) {
  if (a.exponent < 0 || b.exponent < 0 || a.exponent + b.exponent < 1) {
    throw std::domain_error("theta_sum: divergent theta argument");
  }
  const R one = ring_traits<R>::one_like(a.coeff);
  TruncatedSeries<R> out(N, ring_traits<R>::zero_like(a.coeff));

  auto add_term = [&](long n) -> bool {
    const long ta = n * (n + 1) / 2;  // >= 0 for every integer n
    const long tb = n * (n - 1) / 2;
    const long e = a.exponent * ta + b.exponent * tb;
    if (e > static_cast<long>(N)) return false;
    R term = detail::ring_pow(a.coeff, static_cast<unsigned long>(ta), one) *
             detail::ring_pow(b.coeff, static_cast<unsigned long>(tb), one);
    out.coeff(static_cast<std::size_t>(e)) += term;
    return true;
  };

  add_term(0);
  // Exponents are quadratic in n and monotone beyond small |n|; stop once
  // both directions have overshot N twice in a row.
  int consecutive_misses = 0;
  for (long n = 1; consecutive_misses < 2; ++n) {
    const bool hit_plus = add_term(n);
    const bool hit_minus = add_term(-n);
    if (!hit_plus && !hit_minus) {
      ++consecutive_misses;
    } else {
      consecutive_misses = 0;
    }
  }
  return out;
}

/// Product side of the Jacobi triple product, (-a, -b, ab; ab)_infinity.
template <typename R>
TruncatedSeries<R> jtp_product(const Monomial<R>& a, const Monomial<R>& b,
                               std::size_t N) {
  if (a.exponent < 0 || b.exponent < 0 || a.exponent + b.exponent < 1) {
    throw std::domain_error("jtp_product: divergent theta argument");
  }
  const Monomial<R> ab{a.coeff * b.coeff, a.exponent + b.exponent};
  const Monomial<R> na{-a.coeff, a.exponent};
  const Monomial<R> nb{-b.coeff, b.exponent};
  return pochhammer(na, ab, N) * pochhammer(nb, ab, N) * pochhammer(ab, ab, N);
}

/// The unilateral form sum_{n>=0} (-1)^n q^{n(n+1)/2} z^{-n}
/// (1 + z + ... + z^{2n}), equal to (q, zq, z^{-1}q; q)_infinity for any unit
/// z. Writing the (1-z^{2n+1})/(1-z) factor as a geometric sum makes z = 1
/// exact as well, where it degenerates to the integer 2n+1.
template <typename R>
TruncatedSeries<R> jtp_modified_sum(const R& z, std::size_t N) {
  auto zinv = ring_traits<R>::invert_unit(z);
  if (!zinv) {
    throw std::domain_error("jtp_modified_sum: z must be a unit");
  }
  const R one = ring_traits<R>::one_like(z);
  TruncatedSeries<R> out(N, ring_traits<R>::zero_like(z));

  const R zsq = z * z;
  R zpow_inv = one;  // z^{-n}
  R geo = one;       // 1 + z + ... + z^{2n}
  R zodd = z;        // z^{2n+1}
  for (unsigned long n = 0;; ++n) {
    const unsigned long e = n * (n + 1) / 2;
    if (e > N) break;
    R term = zpow_inv * geo;
    if (n % 2 == 1) term = -term;
    out.coeff(e) += term;
    geo += zodd;
    geo += zodd * z;
    zodd = zodd * zsq;
    zpow_inv = zpow_inv * (*zinv);
  }
  return out;
}

/// q -> q^k substitution, exact through q^N provided the source is exact
/// through q^{N/k}.
template <typename R>
TruncatedSeries<R> substitute_power(const TruncatedSeries<R>& s, long k,
                                    std::size_t N) {
  if (k <= 0) throw std::invalid_argument("substitute_power: k must be positive");
  if (s.truncation() < N / static_cast<std::size_t>(k)) {
    throw std::invalid_argument("substitute_power: source series too short");
  }
  TruncatedSeries<R> out(N, s.zero_element());
  for (std::size_t i = 0; i * k <= N && i <= s.truncation(); ++i) {
    out.coeff(i * k) = s[i];
  }
  return out;
}

using IntSeries = TruncatedSeries<Int>;

}  // namespace multirank

#include "multirank/cyclotomic.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace multirank {

bool is_odd_prime(long t) {
  if (t < 3 || t % 2 == 0) return false;
  for (long d = 3; d * d <= t; d += 2) {
    if (t % d == 0) return false;
  }
  return true;
}

namespace {

void require_odd_prime(long t) {
  if (!is_odd_prime(t)) {
    throw std::invalid_argument("cyclotomic order must be an odd prime");
  }
}

void require_same_order(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("mixed cyclotomic orders");
  }
}

// Canonicalize a length-t exponent vector: zeta^{t-1} = -(1 + ... + zeta^{t-2}).
std::vector<Int> reduce_full(std::vector<Int> full) {
  std::vector<Int> out(full.begin(), full.end() - 1);
  const Int& top = full.back();
  if (sgn(top) != 0) {
    for (Int& c : out) c -= top;
  }
  return out;
}

}  // namespace

CyclotomicInt::CyclotomicInt(int t, std::vector<Int> coords)
    : order_(t), coords_(std::move(coords)) {}

CyclotomicInt CyclotomicInt::zero(int t) {
  require_odd_prime(t);
  return CyclotomicInt(t, std::vector<Int>(t - 1, Int(0)));
}

CyclotomicInt CyclotomicInt::from_integer(int t, Int value) {
  CyclotomicInt out = zero(t);
  out.coords_[0] = std::move(value);
  return out;
}

CyclotomicInt CyclotomicInt::zeta_power(int t, long k) {
  require_odd_prime(t);
  long e = k % t;
  if (e < 0) e += t;
  std::vector<Int> full(t, Int(0));
  full[static_cast<std::size_t>(e)] = 1;
  return CyclotomicInt(t, reduce_full(std::move(full)));
}

bool CyclotomicInt::is_zero() const {
  for (const Int& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

std::optional<Int> CyclotomicInt::as_rational_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return std::nullopt;
  }
  return coords_[0];
}

CyclotomicInt CyclotomicInt::conjugate(long j) const {
  const int t = order_;
  long r = j % t;
  if (r < 0) r += t;
  if (r == 0) {
    throw std::invalid_argument("conjugate exponent must be coprime to order");
  }
  std::vector<Int> full(t, Int(0));
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (sgn(coords_[k]) == 0) continue;
    full[static_cast<std::size_t>((k * r) % t)] += coords_[k];
  }
  return CyclotomicInt(t, reduce_full(std::move(full)));
}

std::optional<CyclotomicInt> CyclotomicInt::invert_unit() const {
  if (is_zero()) return std::nullopt;
  // Product of all non-identity conjugates; u times it equals the norm.
  CyclotomicInt prod = from_integer(order_, 1);
  for (long j = 2; j < order_; ++j) prod = prod * conjugate(j);
  const CyclotomicInt norm_elem = *this * prod;
  std::optional<Int> norm = norm_elem.as_rational_integer();
  if (!norm) {
    throw std::logic_error("norm of a cyclotomic integer must be rational");
  }
  if (*norm == 1) return prod;
  if (*norm == -1) return -prod;
  return std::nullopt;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out = *this;
  for (Int& c : out.coords_) c = -c;
  return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  require_same_order(a, b);
  const int t = a.order();
  std::vector<Int> full(t, Int(0));
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) {
      if (sgn(b.coords_[j]) == 0) continue;
      full[(i + j) % static_cast<std::size_t>(t)] +=
          a.coords_[i] * b.coords_[j];
    }
  }
  return CyclotomicInt(t, reduce_full(std::move(full)));
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& v) {
  os << "[";
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    if (i > 0) os << ",";
    os << v.coords()[i].get_str();
  }
  return os << "]_z" << v.order();
}

CycSeries to_cyclotomic(const IntSeries& s, int t) {
  CycSeries out(s.truncation(), CyclotomicInt::zero(t));
  for (std::size_t i = 0; i <= s.truncation(); ++i) {
    out.coeff(i) = CyclotomicInt::from_integer(t, s[i]);
  }
  return out;
}

bool cyclotomic_factorization_check(int t, std::size_t N) {
  require_odd_prime(t);
  CycSeries lhs =
      CycSeries::constant(CyclotomicInt::from_integer(t, 1), N);
  for (long j = 0; j < t; ++j) {
    lhs = lhs * pochhammer(
                    Monomial<CyclotomicInt>{CyclotomicInt::zeta_power(t, j), 1},
                    1L, N);
  }
  const CycSeries rhs = to_cyclotomic(pochhammer(q_power(t), t, N), t);
  return lhs == rhs;
}

}  // namespace multirank

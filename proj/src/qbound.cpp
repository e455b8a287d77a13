#include "qlgh/qbound.hpp"

#include <algorithm>
#include <sstream>

namespace qlgh {

QDegreeBound QDegreeBound::one() {
  QDegreeBound b;
  b.zero_ = false;
  return b;
}

QDegreeBound QDegreeBound::power(long exponent) {
  QDegreeBound b = one();
  b.hi_ = b.lo_ = exponent;
  return b;
}

QDegreeBound QDegreeBound::q_number(int base_exp, int n) {
  QDegreeBound b = one();
  if (n == 0) {
    b.zero_ = true;
    return b;
  }
  b.hi_ = static_cast<long>(base_exp) * (n - 1);
  return b;
}

QDegreeBound QDegreeBound::q_factorial(int base_exp, int n) {
  QDegreeBound b = one();
  b.hi_ = static_cast<long>(base_exp) * n * (n - 1) / 2;
  if (n <= 1) b.hi_ = 0;
  return b;
}

QDegreeBound QDegreeBound::inverse_q_number(int base_exp, int n) {
  QDegreeBound b = one();
  if (n >= 2) b.den_[{base_exp, n}] = 1;
  return b;
}

QDegreeBound QDegreeBound::inverse_q_factorial(int base_exp, int n) {
  QDegreeBound b = one();
  for (int j = 2; j <= n; ++j) b.den_[{base_exp, j}] += 1;
  return b;
}

QDegreeBound QDegreeBound::q_binomial(int base_exp, int n, int k) {
  QDegreeBound b = one();
  b.hi_ = static_cast<long>(base_exp) * k * (n - k);
  return b;
}

long QDegreeBound::denominator_degree() const {
  long degree = 0;
  for (const auto& [key, mult] : den_) {
    degree += static_cast<long>(mult) * key.first * (key.second - 1);
  }
  return degree;
}

QDegreeBound& QDegreeBound::join(const QDegreeBound& other) {
  if (other.zero_) return *this;
  if (zero_) return *this = other;
  std::map<std::pair<int, int>, int> den = den_;
  for (const auto& [key, mult] : other.den_) {
    int& slot = den[key];
    slot = std::max(slot, mult);
  }
  QDegreeBound merged = one();
  merged.den_ = std::move(den);
  long d = merged.denominator_degree();
  merged.hi_ = std::max(hi_ + d - denominator_degree(),
                        other.hi_ + d - other.denominator_degree());
  merged.lo_ = std::min(lo_, other.lo_);
  return *this = std::move(merged);
}

QDegreeBound& QDegreeBound::operator*=(const QDegreeBound& other) {
  if (zero_ || other.zero_) return *this = QDegreeBound();
  hi_ += other.hi_;
  lo_ += other.lo_;
  for (const auto& [key, mult] : other.den_) den_[key] += mult;
  return *this;
}

QDegreeBound QDegreeBound::pow(int exponent) const {
  QDegreeBound result = one();
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string QDegreeBound::to_string() const {
  if (zero_) return "zero";
  std::ostringstream os;
  os << "exponents [" << lo_ << ", " << hi_ << "], denominator degree "
     << denominator_degree();
  return os.str();
}

}  // namespace qlgh

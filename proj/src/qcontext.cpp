#include "qlgh/qcontext.hpp"

#include "qlgh/error.hpp"

namespace qlgh {

QContext::QContext(Rational q) : q_(std::move(q)) {}

Rational QContext::power(long exponent) const {
  if (exponent < 0 && q_.is_zero()) {
    throw DomainError("negative power of q at q = 0");
  }
  return q_.pow(exponent);
}

// Caller must hold mutex_.
const Rational& QContext::base_power(int base_exp) const {
  auto it = base_powers_.find(base_exp);
  if (it == base_powers_.end()) {
    it = base_powers_.emplace(base_exp, q_.pow(base_exp)).first;
  }
  return it->second;
}

Rational QContext::q_number(int base_exp, int n) const {
  if (n < 0) throw DomainError("q-number of a negative integer");
  if (n == 0) return Rational(0);
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(base_exp, n);
  if (auto it = numbers_.find(key); it != numbers_.end()) return it->second;
  const Rational& b = base_power(base_exp);
  Rational sum(0);
  Rational term(1);
  for (int k = 1; k <= n; ++k) {
    sum += term;
    term *= b;
  }
  numbers_.emplace(key, sum);
  return sum;
}

Rational QContext::q_factorial(int base_exp, int n) const {
  if (n < 0) throw DomainError("q-factorial of a negative integer");
  {
    std::lock_guard lock(mutex_);
    if (auto it = factorials_.find({base_exp, n}); it != factorials_.end()) {
      return it->second;
    }
  }
  Rational product(1);
  for (int k = 2; k <= n; ++k) product *= q_number(base_exp, k);
  std::lock_guard lock(mutex_);
  factorials_.emplace(std::make_pair(base_exp, n), product);
  return product;
}

void QContext::require_invertible_factorial(int base_exp, int n) const {
  for (int j = 2; j <= n; ++j) {
    if (q_number(base_exp, j).is_zero()) {
      throw VanishingFactorError(base_exp, j, q_.to_string());
    }
  }
}

Rational QContext::inverse_q_factorial(int base_exp, int n) const {
  require_invertible_factorial(base_exp, n);
  return q_factorial(base_exp, n).inverse();
}

Rational QContext::q_semifactorial(int m, int k) const {
  if (k < 0) throw DomainError("q-semifactorial with negative k");
  Rational product(1);
  for (int l = 1; l <= k; ++l) product *= q_number(1, m * l);
  return product;
}

Rational QContext::inverse_q_semifactorial(int m, int k) const {
  for (int l = 1; l <= k; ++l) {
    if (q_number(1, m * l).is_zero()) {
      throw VanishingFactorError(1, m * l, q_.to_string());
    }
  }
  return q_semifactorial(m, k).inverse();
}

Rational QContext::q_binomial(int base_exp, int n, int k) const {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("q-binomial [" + std::to_string(n) + ";" +
                      std::to_string(k) + "] outside 0 <= k <= n");
  }
  std::lock_guard lock(mutex_);
  auto& rows = binomial_rows_[base_exp];
  const Rational& b = base_power(base_exp);
  // [n;k] = [n-1;k-1] + (q^m)^k [n-1;k]
  while (static_cast<int>(rows.size()) <= n) {
    int row = static_cast<int>(rows.size());
    std::vector<Rational> next(row + 1, Rational(1));
    Rational bk = b;
    for (int j = 1; j < row; ++j) {
      next[j] = rows[row - 1][j - 1] + bk * rows[row - 1][j];
      bk *= b;
    }
    rows.push_back(std::move(next));
  }
  return rows[n][k];
}

Rational QContext::q_shifted_factorial(const Rational& a, int n) const {
  if (n < 0) throw DomainError("q-shifted factorial with negative n");
  Rational product(1);
  Rational qk(1);
  for (int k = 0; k < n; ++k) {
    product *= Rational(1) - a * qk;
    qk *= q_;
  }
  return product;
}

}  // namespace qlgh

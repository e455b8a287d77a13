#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qlgh/rational.hpp"

namespace qlgh {

/// A fixed rational deformation parameter q together with memoized
/// q-combinatorics in the bases q^m.
///
/// The memo tables are the only mutable state; they are guarded by a mutex so
/// one context can be shared by concurrent readers. Every memoized value is a
/// pure function of (q, arguments).
class QContext {
 public:
  explicit QContext(Rational q);

  QContext(const QContext&) = delete;
  QContext& operator=(const QContext&) = delete;

  const Rational& q() const { return q_; }

  /// q^e for any integer e (DomainError for negative e at q = 0).
  Rational power(long exponent) const;

  /// [n]_{q^m} = sum_{k=1..n} (q^m)^{k-1}; zero for n = 0.
  Rational q_number(int base_exp, int n) const;

  /// [n]_{q^m}! = prod_{k=1..n} [k]_{q^m}; one for n = 0.
  Rational q_factorial(int base_exp, int n) const;

  /// 1 / [n]_{q^m}!, or VanishingFactorError naming the first vanishing
  /// factor [j]_{q^m}.
  Rational inverse_q_factorial(int base_exp, int n) const;

  /// [mk]_q!! = prod_{l=1..k} [ml]_q.
  Rational q_semifactorial(int m, int k) const;

  /// 1 / [mk]_q!!, with the same vanishing diagnostics as above.
  Rational inverse_q_semifactorial(int m, int k) const;

  /// Gaussian binomial [n;k] in base q^m. Computed from the q-Pascal
  /// recurrence, so it is defined at every q. DomainError unless 0 <= k <= n.
  Rational q_binomial(int base_exp, int n, int k) const;

  /// (a;q)_n = prod_{k=0..n-1} (1 - a q^k).
  Rational q_shifted_factorial(const Rational& a, int n) const;

  /// Throws VanishingFactorError if some [j]_{q^m}, 1 <= j <= n, is zero.
  void require_invertible_factorial(int base_exp, int n) const;

 private:
  const Rational& base_power(int base_exp) const;

  Rational q_;
  mutable std::mutex mutex_;
  mutable std::map<int, Rational> base_powers_;
  mutable std::map<std::pair<int, int>, Rational> numbers_;
  mutable std::map<std::pair<int, int>, Rational> factorials_;
  mutable std::map<int, std::vector<std::vector<Rational>>> binomial_rows_;
};

/// C(k, 2) = k(k-1)/2.
constexpr long choose2(long k) { return k * (k - 1) / 2; }

}  // namespace qlgh

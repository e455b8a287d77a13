#pragma once

#include <map>
#include <string>
#include <utility>

namespace qlgh {

/// Structural degree bound for a rational function of q built from powers of
/// q, q-integers [j]_{q^b}, their inverses, sums and products.
///
/// A bound (hi, lo, den) certifies c(q) when c(q) = P(q) / D(q) with
///   D(q) = prod [j]_{q^b}^{den[(b, j)]}
/// and P a Laurent polynomial whose exponents lie in [lo, hi]. A uniform bound
/// for a polynomial certifies each of its coefficients with the same D.
///
/// If c is certified and vanishes at hi - lo + 1 distinct rational q that are
/// neither 0 nor roots of D, then c is identically zero. For rational q the
/// only such roots are q = -1.
class QDegreeBound {
 public:
  /// The bound of the zero function; the identity for `join`.
  QDegreeBound() = default;

  static QDegreeBound one();
  static QDegreeBound power(long exponent);
  /// [n]_{q^b} in a numerator.
  static QDegreeBound q_number(int base_exp, int n);
  static QDegreeBound q_factorial(int base_exp, int n);
  static QDegreeBound inverse_q_number(int base_exp, int n);
  static QDegreeBound inverse_q_factorial(int base_exp, int n);
  /// Gaussian binomial [n;k] in base q^b, a polynomial of degree b k (n-k).
  static QDegreeBound q_binomial(int base_exp, int n, int k);

  bool is_zero() const { return zero_; }
  long hi() const { return hi_; }
  long lo() const { return lo_; }
  const std::map<std::pair<int, int>, int>& denominator() const {
    return den_;
  }
  long denominator_degree() const;

  /// Distinct evaluation points that certify vanishing (0 for the zero bound).
  long points_needed() const { return zero_ ? 0 : hi_ - lo_ + 1; }

  /// Bound of a sum whose terms are certified by `*this` and `other`.
  QDegreeBound& join(const QDegreeBound& other);
  QDegreeBound& operator*=(const QDegreeBound& other);
  friend QDegreeBound operator*(QDegreeBound a, const QDegreeBound& b) {
    return a *= b;
  }
  QDegreeBound pow(int exponent) const;

  std::string to_string() const;

  friend bool operator==(const QDegreeBound&, const QDegreeBound&) = default;

 private:
  bool zero_ = true;
  long hi_ = 0;
  long lo_ = 0;
  std::map<std::pair<int, int>, int> den_;
};

inline QDegreeBound join(QDegreeBound a, const QDegreeBound& b) {
  return a.join(b);
}

}  // namespace qlgh

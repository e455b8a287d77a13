#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "qlgh/rational.hpp"
#include "qlgh/var.hpp"

namespace qlgh {

using Exponents = std::array<std::uint16_t, kVarCount>;

int total_degree(const Exponents& e);

/// Exponent vector from (variable, power) pairs; repeated variables add up.
Exponents make_exponents(std::initializer_list<std::pair<Var, int>> powers);

/// Graded lexicographic order, largest first: higher total degree first, ties
/// broken lexicographically along the registry order (x before y before z ...).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Rational.
///
/// Zero coefficients are never stored, so the term map is a canonical form and
/// structural equality coincides with mathematical equality.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly monomial(const Rational& coeff, const Exponents& e);
  static MPoly monomial(const Rational& coeff,
                        std::initializer_list<std::pair<Var, int>> powers);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Zero for constants and for the zero polynomial.
  int total_degree() const;
  int degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  /// Adds c * monomial(e), keeping the canonical form.
  void add_term(const Exponents& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const;

  MPoly pow(unsigned exponent) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Canonical text rendering (see render.hpp).
  std::string to_string() const;

 private:
  TermMap terms_;
};

inline MPoly scale(const MPoly& p, const Rational& c) { return p * c; }

/// Replaces each bound variable by its polynomial; unbound variables pass
/// through unchanged.
MPoly substitute(const MPoly& p, const std::map<Var, MPoly>& bindings);

/// Exact evaluation. DomainError if a variable of p has no binding.
Rational eval_rational(const MPoly& p, const std::map<Var, Rational>& point);

}  // namespace qlgh

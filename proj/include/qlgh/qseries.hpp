#pragma once

#include <vector>

#include "qlgh/mpoly.hpp"
#include "qlgh/qbound.hpp"
#include "qlgh/qcontext.hpp"

namespace qlgh {

/// Power series in the formal variable t truncated at order N, with
/// polynomial coefficients free of t. Binary operations truncate to the
/// smaller order of the two operands.
class TSeries {
 public:
  explicit TSeries(unsigned order);
  TSeries(unsigned order, std::vector<MPoly> coeffs);

  static TSeries one(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

  /// Coefficient of t^n; DomainError for n > order().
  const MPoly& coeff(unsigned n) const;
  void set_coeff(unsigned n, MPoly value);

  TSeries truncated(unsigned order) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  /// Truncated Cauchy product.
  friend TSeries operator*(const TSeries& a, const TSeries& b);

  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<MPoly> coeffs_;
};

inline TSeries series_mul(const TSeries& a, const TSeries& b) { return a * b; }
inline const MPoly& coeff(const TSeries& a, unsigned n) { return a.coeff(n); }

// The kernels below expand f(c t^p) for a t-free polynomial c and p >= 1
// (p = 0 only with c = 0). Vanishing q-factorial denominators raise
// VanishingFactorError.

/// e_q(c t^p) = sum_n c^n t^{pn} / [n]_q!.
TSeries series_eq(const QContext& ctx, const MPoly& c, unsigned p, unsigned N);

/// E_{q^m}(c t^p) = sum_n q^{m C(n,2)} c^n t^{pn} / [n]_{q^m}!.
TSeries series_EQm(const QContext& ctx, int m, const MPoly& c, unsigned p,
                   unsigned N);

/// Order-n (q,m) Bessel-Tricomi function
///   sum_k (-1)^k q^{m C(k,2)} c^k t^{pk} / ([k]_{q^m}! [n+k]_{q^m}!).
TSeries series_bessel_tricomi(const QContext& ctx, int m, unsigned order_n,
                              const MPoly& c, unsigned p, unsigned N);

/// Bounds for the scalar factor of the k-th term of each kernel.
QDegreeBound eq_term_bound(int k);
QDegreeBound EQm_term_bound(int m, int k);
QDegreeBound bessel_tricomi_term_bound(int m, int order_n, int k);

}  // namespace qlgh

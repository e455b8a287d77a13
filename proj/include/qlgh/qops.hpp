#pragma once

#include <map>
#include <vector>

#include "qlgh/mpoly.hpp"
#include "qlgh/qbound.hpp"
#include "qlgh/qcontext.hpp"

namespace qlgh {

/// The q-difference operator D in base q^m acting on one variable; other
/// variables are constants. Holds a reference to its context.
class QDiffOp {
 public:
  /// DomainError if q^m = 1, where the divided difference is undefined.
  QDiffOp(const QContext& ctx, int base_exp, Var target);

  /// x^n -> [n]_{q^m} x^{n-1}, extended linearly.
  MPoly apply(const MPoly& p) const;

  /// n-fold inverse on the monomial basis: x^k -> [k]!/[k+n]! x^{k+n}
  /// (factorials in base q^m), the unique linear right inverse of apply^n
  /// with D^{-n}(1) = x^n/[n]!.
  MPoly inverse_pow(unsigned n, const MPoly& p) const;

  int base_exp() const { return base_exp_; }
  Var target() const { return target_; }

 private:
  const QContext& ctx_;
  int base_exp_;
  Var target_;
};

inline MPoly qdiff(const QDiffOp& op, const MPoly& p) { return op.apply(p); }
inline MPoly qdiff_inv_pow(const QDiffOp& op, unsigned n, const MPoly& p) {
  return op.inverse_pow(n, p);
}

enum class JhcSign { plus, minus };

/// (a (+)_q b)^n = sum_k [n;k]_q q^{C(k,2)} a^{n-k} b^k; the minus sign
/// negates b termwise. n = 0 gives 1.
MPoly jhc_pow(const QContext& ctx, const MPoly& a, const MPoly& b, int n,
              JhcSign sign);

/// (a (-)_{q,q^m} b)^n =
///   [n]_q! sum_k (-1)^k q^{m C(k,2)} a^{n-k} b^k / ([n-k]_q! [k]_{q^m}!).
MPoly mixed_sub_pow(const QContext& ctx, const MPoly& a, const MPoly& b,
                    int m, int n);

/// Coefficients c_0..c_N of a formal series F(w) = sum c_n w^n.
using CoeffSeq = std::vector<MPoly>;

/// F(a (+/-)_q b) = sum_n c_n (a (+/-)_q b)^n over the stored coefficients.
MPoly compose_jhc(const QContext& ctx, const CoeffSeq& f, const MPoly& a,
                  const MPoly& b, JhcSign sign);

/// What one argument slot of a polynomial is replaced by: either an ordinary
/// polynomial, whose powers are ordinary powers, or a JHC combination whose
/// k-th power is jhc_pow(first, second, k).
///
/// The bounds certify the scalar coefficients of `first` and `second` as
/// functions of q (QDegreeBound::one() when they are plain rationals).
struct SlotArg {
  enum class Kind { plain, jhc };

  Kind kind = Kind::plain;
  MPoly first;
  MPoly second;
  JhcSign sign = JhcSign::plus;
  QDegreeBound first_bound = QDegreeBound::one();
  QDegreeBound second_bound = QDegreeBound::one();

  static SlotArg plain(MPoly p, QDegreeBound bound = QDegreeBound::one());
  static SlotArg jhc(MPoly a, MPoly b, JhcSign sign,
                     QDegreeBound a_bound = QDegreeBound::one(),
                     QDegreeBound b_bound = QDegreeBound::one());

  MPoly power(const QContext& ctx, int exponent) const;
  /// Uniform bound over the coefficients of power(ctx, e) for all e <= max_e.
  QDegreeBound power_bound(int max_exponent) const;
};

/// Replaces every slot variable in p by its argument, one slot at a time
/// (JHC expansions are applied independently per slot). Variables without a
/// slot pass through.
MPoly compose_slots(const QContext& ctx, const MPoly& p,
                    const std::map<Var, SlotArg>& slots);

/// Bound for compose_slots(p, slots) given a uniform coefficient bound of p and
/// the largest exponent any slot variable reaches in p.
QDegreeBound compose_slots_bound(const QDegreeBound& coeff_bound,
                                 const std::map<Var, SlotArg>& slots,
                                 int max_exponent);

}  // namespace qlgh

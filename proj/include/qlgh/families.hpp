#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "qlgh/mpoly.hpp"
#include "qlgh/qbound.hpp"
#include "qlgh/qcontext.hpp"

namespace qlgh {

enum class FamilyKind { classical_gh, q_gh, q_2dlp, q_lghp, q_hermite };

/// One member of a polynomial family. `m` and `s` are ignored by the kinds
/// that do not use them.
struct FamilySpec {
  FamilyKind kind = FamilyKind::q_lghp;
  int n = 0;
  int m = 1;
  int s = 1;

  /// DomainError unless n >= 0 and m, s >= 1.
  void validate() const;

  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

/// Gould-Hopper g_n^m(x, y) = n! sum_k x^{n-mk} y^k / (k! (n-mk)!).
MPoly classical_gh(int n, int m);

/// Classical two-variable Laguerre _mL_n(x, y), the q = 1 form of q_2dlp with
/// integer factorials.
MPoly classical_2dlp(int n, int m);

/// Classical Laguerre-Gould-Hopper _LH_n^{(m,s)}(x, y, z).
MPoly classical_lghp(int n, int m, int s);

/// q-Gould-Hopper polynomial in (x, y):
///   [n]_q! sum_k (-1)^k q^{m C(k,2)} x^{n-mk} y^k / ([n-mk]_q! [mk]_q!!).
MPoly q_gh(const QContext& ctx, int n, int m);

/// q-deformed 2D Laguerre polynomial _mL_n(x, y|q):
///   [n]_q! sum_k q^{m C(k,2)} x^k y^{n-mk} / (([k]_{q^m}!)^2 [n-mk]_q!).
MPoly q_2dlp(const QContext& ctx, int n, int m);

/// _mL_n built by applying E_{q^m}(D_x^{-1} D_y^m) (base q^m for x, q for y)
/// to y^n, term by term. DomainError at q = 1.
MPoly q_2dlp_operational(const QContext& ctx, int n, int m);

/// q-Laguerre-Gould-Hopper polynomial _LH_n^{(m,s)}(x, y, z|q):
///   [n]_q! sum_k q^{s C(k,2)} z^k _mL_{n-sk}(x, y|q) / ([k]_{q^s}! [n-sk]_q!).
MPoly q_lghp(const QContext& ctx, int n, int m, int s);

/// _LH_n^{(m,s)} as E_{q^m}(D_x^{-1} D_y^m) applied to the q-Gould-Hopper
/// polynomial taken at (y, -[s]_q z).
MPoly q_lghp_operational_a(const QContext& ctx, int n, int m, int s);

/// _LH_n^{(m,s)} as E_{q^s}(z D_y^s) applied to _mL_n(x, y|q).
MPoly q_lghp_operational_b(const QContext& ctx, int n, int m, int s);

/// q-Hermite H_n(y, z|q) := _LH_n^{(m,2)}(0, y, z|q), which does not depend
/// on m:  [n]_q! sum_k q^{2 C(k,2)} z^k y^{n-2k} / ([k]_{q^2}! [n-2k]_q!).
MPoly q_hermite(const QContext& ctx, int n);

MPoly build_family(const QContext& ctx, const FamilySpec& spec);

/// Uniform q-degree bound for the coefficients of build_family(spec).
QDegreeBound family_bound(const FamilySpec& spec);

/// `LH(2,2,2)`-style label, the same syntax the CLI parses.
std::string family_label(const FamilySpec& spec);
/// `{}_{L}H_{2}^{(2,2)}(x,y,z|q)`-style label.
std::string family_latex(const FamilySpec& spec);

/// Memo table of family members for one context; safe for concurrent use.
class FamilyCache {
 public:
  explicit FamilyCache(const QContext& ctx) : ctx_(ctx) {}

  const QContext& context() const { return ctx_; }
  MPoly get(const FamilySpec& spec) const;

 private:
  const QContext& ctx_;
  mutable std::mutex mutex_;
  mutable std::map<FamilySpec, MPoly> table_;
};

}  // namespace qlgh

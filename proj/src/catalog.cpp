#include <random>

#include "qlgh/error.hpp"
#include "qlgh/identities.hpp"
#include "qlgh/qops.hpp"
#include "qlgh/qseries.hpp"

namespace qlgh {

Expansion& Expansion::operator+=(const Expansion& o) {
  poly += o.poly;
  bound.join(o.bound);
  return *this;
}

Expansion operator*(const Expansion& a, const Expansion& b) {
  return {a.poly * b.poly, a.bound * b.bound};
}

namespace {

using enum Var;

Expansion unit() { return {MPoly(1), QDegreeBound::one()}; }

MPoly v(Var x) { return MPoly::variable(x); }

SlotArg plain(Var x) { return SlotArg::plain(v(x)); }
SlotArg plain(MPoly p) { return SlotArg::plain(std::move(p)); }
SlotArg minus(Var a, Var b) { return SlotArg::jhc(v(a), v(b), JhcSign::minus); }
SlotArg plus(Var a, Var b) { return SlotArg::jhc(v(a), v(b), JhcSign::plus); }

SlotArg scaled(SlotArg arg, const Rational& c) {
  arg.first *= c;
  arg.second *= c;
  return arg;
}

std::vector<Var> native_vars(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::q_lghp:
      return {x, y, z};
    case FamilyKind::q_hermite:
      return {y, z};
    default:
      return {x, y};
  }
}

int arg(const IdentityParams& p, const char* name) {
  auto it = p.find(name);
  if (it == p.end()) {
    throw DomainError(std::string("missing parameter ") + name);
  }
  return it->second;
}

class Builder {
 public:
  explicit Builder(const BuildContext& b) : b_(b) {}

  const QContext& ctx() const { return b_.ctx; }
  unsigned order() const { return b_.N; }

  Expansion instantiate(const MPoly& p, const QDegreeBound& bound, int degree,
                        const std::vector<Var>& vars,
                        const std::vector<SlotArg>& args) const {
    std::map<Var, SlotArg> slots;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const SlotArg& a = args.at(i);
      bool identity = a.kind == SlotArg::Kind::plain && a.first == v(vars[i]);
      if (!identity) slots.emplace(vars[i], a);
    }
    return {compose_slots(ctx(), p, slots),
            compose_slots_bound(bound, slots, degree)};
  }

  Expansion family(const FamilySpec& spec,
                   const std::vector<SlotArg>& args) const {
    return instantiate(b_.families.get(spec), family_bound(spec), spec.n,
                       native_vars(spec.kind), args);
  }

  Expansion LH(int n, int m, int s, SlotArg a, SlotArg b, SlotArg c) const {
    return family({FamilyKind::q_lghp, n, m, s}, {a, b, c});
  }
  Expansion L(int n, int m, SlotArg a, SlotArg b) const {
    return family({FamilyKind::q_2dlp, n, m, 1}, {a, b});
  }
  Expansion G(int n, int s, SlotArg a, SlotArg b) const {
    return family({FamilyKind::q_gh, n, s, 1}, {a, b});
  }
  Expansion H(int n, SlotArg a, SlotArg b) const {
    return family({FamilyKind::q_hermite, n, 1, 1}, {a, b});
  }

  Expansion jhc(Var a, Var b, int n, JhcSign sign = JhcSign::minus) const {
    QDegreeBound bound;
    for (int k = 0; k <= n; ++k) {
      bound.join(QDegreeBound::q_binomial(1, n, k) *
                 QDegreeBound::power(choose2(k)));
    }
    return {jhc_pow(ctx(), v(a), v(b), n, sign), bound};
  }

  static Expansion power(Var a, int n) {
    return {v(a).pow(static_cast<unsigned>(n)), QDegreeBound::one()};
  }

  QScalar binom(int n, int k) const {
    return {ctx().q_binomial(1, n, k), QDegreeBound::q_binomial(1, n, k)};
  }
  QScalar binom_or_zero(int n, int k) const {
    if (k < 0 || k > n) return {Rational(0), QDegreeBound()};
    return binom(n, k);
  }
  QScalar qpow(long e) const {
    return {ctx().power(e), QDegreeBound::power(e)};
  }
  QScalar inv_factorial(int base_exp, int n) const {
    return {ctx().inverse_q_factorial(base_exp, n),
            QDegreeBound::inverse_q_factorial(base_exp, n)};
  }

 private:
  const BuildContext& b_;
};

MPoly flatten(const TSeries& s) {
  MPoly out;
  for (unsigned n = 0; n <= s.order(); ++n) {
    out += s.coeff(n) * v(t).pow(n);
  }
  return out;
}

// ---- generating functions and kernel rules -------------------------------

IdentitySides gf_laguerre(const BuildContext& b, const IdentityParams& p) {
  Builder B(b);
  int m = arg(p, "m");
  unsigned N = B.order();
  IdentitySides out;
  for (unsigned n = 0; n <= N; ++n) {
    out.lhs += B.inv_factorial(1, static_cast<int>(n)) *
               (B.L(static_cast<int>(n), m, plain(x), plain(y)) *
                B.power(t, static_cast<int>(n)));
  }
  TSeries rhs = series_eq(b.ctx, v(y), 1, N) *
                series_bessel_tricomi(b.ctx, m, 0, -v(x), m, N);
  out.rhs.poly = flatten(rhs);
  for (unsigned a = 0; a <= N; ++a) {
    for (unsigned k = 0; m * k + a <= N; ++k) {
      out.rhs.bound.join(eq_term_bound(static_cast<int>(a)) *
                         bessel_tricomi_term_bound(m, 0, static_cast<int>(k)));
    }
  }
  return out;
}

IdentitySides gf_lghp(const BuildContext& b, const IdentityParams& p) {
  Builder B(b);
  int m = arg(p, "m");
  int s = arg(p, "s");
  unsigned N = B.order();
  IdentitySides out;
  for (unsigned n = 0; n <= N; ++n) {
    int ni = static_cast<int>(n);
    out.lhs += B.inv_factorial(1, ni) *
               (B.LH(ni, m, s, plain(x), plain(y), plain(z)) * B.power(t, ni));
  }
  TSeries rhs = series_eq(b.ctx, v(y), 1, N) *
                series_EQm(b.ctx, s, v(z), s, N) *
                series_bessel_tricomi(b.ctx, m, 0, -v(x), m, N);
  out.rhs.poly = flatten(rhs);
  for (unsigned a = 0; a <= N; ++a) {
    for (unsigned j = 0; a + s * j <= N; ++j) {
      for (unsigned k = 0; a + s * j + m * k <= N; ++k) {
        out.rhs.bound.join(eq_term_bound(static_cast<int>(a)) *
                           EQm_term_bound(s, static_cast<int>(j)) *
                           bessel_tricomi_term_bound(m, 0, static_cast<int>(k)));
      }
    }
  }
  return out;
}

QDegreeBound eq_times_EQm_bound(int m, unsigned N) {
  QDegreeBound out;
  for (unsigned a = 0; a <= N; ++a) {
    for (unsigned k = 0; a + k <= N; ++k) {
      out.join(eq_term_bound(static_cast<int>(a)) *
               EQm_term_bound(m, static_cast<int>(k)));
    }
  }
  return out;
}

IdentitySides rule_jhc(const BuildContext& b, const IdentityParams& p) {
  Builder B(b);
  unsigned N = B.order();
  IdentitySides out;
  if (arg(p, "rule") == 2) {
    out.lhs.poly = flatten(series_eq(b.ctx, v(x), 1, N) *
                           series_EQm(b.ctx, 1, -v(x), 1, N));
    out.lhs.bound = eq_times_EQm_bound(1, N);
    out.rhs = unit();
    return out;
  }
  out.lhs.poly = flatten(series_eq(b.ctx, v(x), 1, N) *
                         series_EQm(b.ctx, 1, v(y), 1, N));
  out.lhs.bound = eq_times_EQm_bound(1, N);
  for (unsigned n = 0; n <= N; ++n) {
    int ni = static_cast<int>(n);
    out.rhs += B.inv_factorial(1, ni) *
               (B.jhc(x, y, ni, JhcSign::plus) * B.power(t, ni));
  }
  return out;
}

IdentitySides rule_mixed(const BuildContext& b, const IdentityParams& p) {
  Builder B(b);
  int m = arg(p, "m");
  unsigned N = B.order();
  IdentitySides out;
  out.lhs.poly = flatten(series_eq(b.ctx, v(x), 1, N) *
                         series_EQm(b.ctx, m, v(y), 1, N));
  out.lhs.bound = eq_times_EQm_bound(m, N);
  for (unsigned n = 0; n <= N; ++n) {
    int ni = static_cast<int>(n);
    out.rhs.poly += mixed_sub_pow(b.ctx, v(x), v(y), m, ni) *
                    v(t).pow(n) * b.ctx.inverse_q_factorial(1, ni);
    for (int k = 0; k <= ni; ++k) {
      out.rhs.bound.join(QDegreeBound::inverse_q_factorial(1, ni) *
                         QDegreeBound::q_factorial(1, ni) *
                         QDegreeBound::power(m * choose2(k)) *
                         QDegreeBound::inverse_q_factorial(1, ni - k) *
                         QDegreeBound::inverse_q_factorial(m, k));
    }
  }
  return out;
}

// ---- connection formulas for the three-variable family -------------------

IdentitySides connection_lghp(const BuildContext& b, const IdentityParams& p,
                              bool literal) {
  Builder B(b);
  int k = arg(p, "k"), l = arg(p, "l"), m = arg(p, "m"), s = arg(p, "s");
  IdentitySides out;
  out.lhs = B.LH(k + l, m, s, plain(x), plain(xi), plain(z));
  for (int n = 0; n <= k; ++n) {
    for (int r = 0; r <= l; ++r) {
      int j = k + l - n - r;
      Expansion tail = literal ? B.G(j, s, plain(y), plain(z))
                               : B.LH(j, m, s, plain(x), plain(y), plain(z));
      out.rhs += B.binom(k, n) * B.binom(l, r) * B.qpow(r * (r - l)) *
                 (B.jhc(xi, y, n + r) * tail);
    }
  }
  return out;
}

IdentitySides connection_lghp_two_shift(const BuildContext& b,
                                        const IdentityParams& p) {
  Builder B(b);
  int k = arg(p, "k"), l = arg(p, "l"), m = arg(p, "m"), s = arg(p, "s");
  IdentitySides out;
  out.lhs = B.LH(k + l, m, s, plain(x), plain(xi), plain(zeta));
  for (int n = 0; n <= k; ++n) {
    for (int r = 0; r <= l; ++r) {
      out.rhs += B.binom(k, n) * B.binom(l, r) * B.qpow(r * (r - l)) *
                 (B.G(n + r, s, minus(xi, y), minus(zeta, z)) *
                  B.LH(k + l - n - r, m, s, plain(x), plain(y), plain(z)));
    }
  }
  return out;
}

IdentitySides product_lghp(const BuildContext& b, const IdentityParams& p,
                           bool literal) {
  Builder B(b);
  int n = arg(p, "n"), r = arg(p, "r"), m = arg(p, "m"), s = arg(p, "s");
  IdentitySides out;
  out.lhs = B.LH(n, m, s, plain(x), plain(xi), plain(zeta)) *
            B.LH(r, m, s, plain(X), plain(Omega), plain(U));
  for (int k = 0; k <= n; ++k) {
    for (int q = 0; q <= r; ++q) {
      QScalar c = literal ? B.binom_or_zero(k, n) * B.binom_or_zero(q, r)
                          : B.binom(n, k) * B.binom(r, q);
      if (c.value.is_zero()) continue;
      out.rhs += c * (B.G(k, s, minus(xi, y), minus(zeta, z)) *
                      B.G(q, s, minus(Omega, Y), minus(U, Z)) *
                      B.LH(n - k, m, s, plain(x), plain(y), plain(z)) *
                      B.LH(r - q, m, s, plain(X), plain(Y), plain(Z)));
    }
  }
  return out;
}

// ---- particular cases ------------------------------------------------------

IdentitySides laguerre_connection(const BuildContext& b, int k, int l, int m) {
  Builder B(b);
  IdentitySides out;
  out.lhs = B.L(k + l, m, plain(x), plain(xi));
  for (int n = 0; n <= k; ++n) {
    for (int r = 0; r <= l; ++r) {
      out.rhs += B.binom(k, n) * B.binom(l, r) * B.qpow(r * (r - l)) *
                 (B.jhc(xi, y, n + r) * B.L(k + l - n - r, m, plain(x), plain(y)));
    }
  }
  return out;
}

// sum_k [n;k] q^{w k(k-n)} G_k^s(xi -q y, zeta -q z) LH_{n-k}
IdentitySides lghp_single_shift(const BuildContext& b, const IdentityParams& p,
                                int w) {
  Builder B(b);
  int n = arg(p, "n"), m = arg(p, "m"), s = arg(p, "s");
  IdentitySides out;
  out.lhs = B.LH(n, m, s, plain(x), plain(xi), plain(zeta));
  for (int k = 0; k <= n; ++k) {
    out.rhs += B.binom(n, k) * B.qpow(w * k * (k - n)) *
               (B.G(k, s, minus(xi, y), minus(zeta, z)) *
                B.LH(n - k, m, s, plain(x), plain(y), plain(z)));
  }
  return out;
}

// LH_n(x, xi +q y, z) = sum_k [n;k] q^{w k(k-n)} xi^k LH_{n-k}(x,y,z)
IdentitySides lghp_argument_sum(const BuildContext& b, int n, int m, int s,
                                int w) {
  Builder B(b);
  IdentitySides out;
  out.lhs = B.LH(n, m, s, plain(x), plus(xi, y), plain(z));
  for (int k = 0; k <= n; ++k) {
    out.rhs += B.binom(n, k) * B.qpow(w * k * (k - n)) *
               (B.power(xi, k) * B.LH(n - k, m, s, plain(x), plain(y), plain(z)));
  }
  return out;
}

// LH_n(x, xi +q y, zeta +q z) = sum_k [n;k] q^{w k(k-n)} G_k(xi,zeta) LH_{n-k}
IdentitySides lghp_double_sum(const BuildContext& b, int n, int m, int s,
                              int w) {
  Builder B(b);
  IdentitySides out;
  out.lhs = B.LH(n, m, s, plain(x), plus(xi, y), plus(zeta, z));
  for (int k = 0; k <= n; ++k) {
    out.rhs += B.binom(n, k) * B.qpow(w * k * (k - n)) *
               (B.G(k, s, plain(xi), plain(zeta)) *
                B.LH(n - k, m, s, plain(x), plain(y), plain(z)));
  }
  return out;
}

IdentitySides lghp_product_shifted(const BuildContext& b,
                                   const IdentityParams& p) {
  Builder B(b);
  int n = arg(p, "n"), r = arg(p, "r"), m = arg(p, "m"), s = arg(p, "s");
  IdentitySides out;
  out.lhs = B.LH(n, m, s, plain(x), plain(xi), plus(zeta, z)) *
            B.LH(r, m, s, plain(X), plain(Omega), plus(U, Z));
  for (int k = 0; k <= n; ++k) {
    for (int q = 0; q <= r; ++q) {
      out.rhs += B.binom(n, k) * B.binom(r, q) *
                 (B.jhc(xi, y, k) * B.jhc(Omega, Y, q) *
                  B.LH(n - k, m, s, plain(x), plain(y), plain(z)) *
                  B.LH(r - q, m, s, plain(X), plain(Y), plain(Z)));
    }
  }
  return out;
}

IdentitySides laguerre_product(const BuildContext& b, const IdentityParams& p) {
  Builder B(b);
  int n = arg(p, "n"), r = arg(p, "r"), m = arg(p, "m");
  IdentitySides out;
  out.lhs = B.L(n, m, plain(x), plain(xi)) * B.L(r, m, plain(X), plain(Omega));
  for (int k = 0; k <= n; ++k) {
    for (int q = 0; q <= r; ++q) {
      out.rhs += B.binom(n, k) * B.binom(r, q) *
                 (B.jhc(xi, y, k) * B.jhc(Omega, Y, q) *
                  B.L(n - k, m, plain(x), plain(y)) *
                  B.L(r - q, m, plain(X), plain(Y)));
    }
  }
  return out;
}

// sign = +1: zeta -q z/[s]_q as printed; sign = -1: zeta -q (-z/[s]_q).
IdentitySides gould_hopper_connection(const BuildContext& b,
                                      const IdentityParams& p, int sign) {
  Builder B(b);
  int k = arg(p, "k"), l = arg(p, "l"), s = arg(p, "s");
  Rational c = Rational(sign) * B.ctx().q_number(1, s).inverse();
  SlotArg second = SlotArg::jhc(v(zeta), v(z) * c, JhcSign::minus,
                                QDegreeBound::one(),
                                QDegreeBound::inverse_q_number(1, s));
  IdentitySides out;
  out.lhs = B.G(k + l, s, plain(xi), plain(zeta));
  for (int n = 0; n <= k; ++n) {
    for (int r = 0; r <= l; ++r) {
      out.rhs += B.binom(k, n) * B.binom(l, r) * B.qpow(r * (r - l)) *
                 (B.G(n + r, s, minus(xi, y), second) *
                  B.G(k + l - n - r, s, plain(y), plain(z)));
    }
  }
  return out;
}

IdentitySides hermite_connection(const BuildContext& b,
                                 const IdentityParams& p) {
  Builder B(b);
  int k = arg(p, "k"), l = arg(p, "l");
  IdentitySides out;
  out.lhs = B.H(k + l, plain(xi), plain(z));
  for (int n = 0; n <= k; ++n) {
    for (int r = 0; r <= l; ++r) {
      out.rhs += B.binom(k, n) * B.binom(l, r) * B.qpow(r * (r - l)) *
                 (B.jhc(xi, y, n + r) * B.H(k + l - n - r, plain(y), plain(z)));
    }
  }
  return out;
}

IdentitySides hermite_single(const BuildContext& b, const IdentityParams& p,
                             int w) {
  Builder B(b);
  int n = arg(p, "n");
  IdentitySides out;
  out.lhs = B.H(n, plain(xi), plain(z));
  for (int k = 0; k <= n; ++k) {
    out.rhs += B.binom(n, k) * B.qpow(w * k * (k - n)) *
               (B.jhc(xi, y, k) * B.H(n - k, plain(y), plain(z)));
  }
  return out;
}

// H_n(xi +q y, z) against xi^k H_{n-k} (swapped = true) or xi^{n-k} H_k.
IdentitySides hermite_argument_sum(const BuildContext& b,
                                   const IdentityParams& p, int w,
                                   bool swapped) {
  Builder B(b);
  int n = arg(p, "n");
  IdentitySides out;
  out.lhs = B.H(n, plus(xi, y), plain(z));
  for (int k = 0; k <= n; ++k) {
    int e = swapped ? k : n - k;
    out.rhs += B.binom(n, k) * B.qpow(w * k * (k - n)) *
               (B.power(xi, e) * B.H(n - e, plain(y), plain(z)));
  }
  return out;
}

IdentitySides hermite_product(const BuildContext& b, const IdentityParams& p) {
  Builder B(b);
  int n = arg(p, "n"), r = arg(p, "r");
  IdentitySides out;
  out.lhs = B.H(n, plain(xi), plain(z)) * B.H(r, plain(Omega), plain(Z));
  for (int k = 0; k <= n; ++k) {
    for (int q = 0; q <= r; ++q) {
      out.rhs += B.binom(n, k) * B.binom(r, q) *
                 (B.jhc(xi, y, k) * B.jhc(Omega, Y, q) *
                  B.H(n - k, plain(y), plain(z)) *
                  B.H(r - q, plain(Y), plain(Z)));
    }
  }
  return out;
}

// ---- classical limits ------------------------------------------------------

// Route 1 builds from the classical constructors with ordinary arithmetic;
// route 2 evaluates the q-constructors and q-binomials at q = 1, with
// g_n^m(a, b) = G_n^m(a, -m b | 1) and a - b as the q = 1 JHC difference.
class Classical {
 public:
  Classical(const BuildContext& b, const IdentityParams& p)
      : B_(b), route_(arg(p, "route")) {
    if (route_ == 2 && !b.ctx.q().is_one()) {
      throw DomainError("the q-sum route of a classical limit needs q = 1");
    }
  }

  Rational binom(int n, int k) const {
    if (route_ == 2) return B_.ctx().q_binomial(1, n, k);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(mpq_class(c));
  }

  SlotArg diff(Var a, Var b) const {
    return route_ == 2 ? minus(a, b) : plain(v(a) - v(b));
  }
  SlotArg sum(Var a, Var b) const {
    return route_ == 2 ? plus(a, b) : plain(v(a) + v(b));
  }
  Expansion diff_pow(Var a, Var b, int n) const {
    if (route_ == 2) return B_.jhc(a, b, n);
    return {(v(a) - v(b)).pow(static_cast<unsigned>(n)), QDegreeBound::one()};
  }

  Expansion LH(int n, int m, int s, SlotArg a, SlotArg b, SlotArg c) const {
    if (route_ == 2) return B_.LH(n, m, s, a, b, c);
    return B_.instantiate(classical_lghp(n, m, s), QDegreeBound::one(), n,
                          {x, y, z}, {a, b, c});
  }

  Expansion g(int n, int m, SlotArg a, SlotArg b) const {
    if (route_ == 2) return B_.G(n, m, a, scaled(b, Rational(-m)));
    return B_.instantiate(classical_gh(n, m), QDegreeBound::one(), n, {x, y},
                          {a, b});
  }

  static Expansion times(const Rational& c, const Expansion& e) {
    return QScalar{c, QDegreeBound::one()} * e;
  }

 private:
  Builder B_;
  int route_;
};

IdentitySides limit_lghp_connection(const BuildContext& b,
                                    const IdentityParams& p, bool zeta_eq_z) {
  Classical C(b, p);
  int k = arg(p, "k"), l = arg(p, "l"), m = arg(p, "m"), s = arg(p, "s");
  IdentitySides out;
  out.lhs = C.LH(k + l, m, s, plain(x), plain(xi), plain(zeta_eq_z ? z : zeta));
  for (int n = 0; n <= k; ++n) {
    for (int r = 0; r <= l; ++r) {
      int j = k + l - n - r;
      Expansion head = zeta_eq_z ? C.diff_pow(xi, y, n + r)
                                 : C.g(n + r, s, C.diff(xi, y), C.diff(zeta, z));
      out.rhs += C.times(C.binom(k, n) * C.binom(l, r),
                         head * C.LH(j, m, s, plain(x), plain(y), plain(z)));
    }
  }
  return out;
}

IdentitySides limit_lghp_product(const BuildContext& b,
                                 const IdentityParams& p, bool zeta_eq_z) {
  Classical C(b, p);
  int n = arg(p, "n"), r = arg(p, "r"), m = arg(p, "m"), s = arg(p, "s");
  IdentitySides out;
  out.lhs = C.LH(n, m, s, plain(x), plain(xi), plain(zeta_eq_z ? z : zeta)) *
            C.LH(r, m, s, plain(X), plain(Omega), plain(zeta_eq_z ? Z : U));
  for (int k = 0; k <= n; ++k) {
    for (int q = 0; q <= r; ++q) {
      Expansion head =
          zeta_eq_z ? C.diff_pow(xi, y, k) * C.diff_pow(Omega, Y, q)
                    : C.g(k, s, C.diff(xi, y), C.diff(zeta, z)) *
                          C.g(q, s, C.diff(Omega, Y), C.diff(U, Z));
      out.rhs += C.times(C.binom(n, k) * C.binom(r, q),
                         head *
                             C.LH(n - k, m, s, plain(x), plain(y), plain(z)) *
                             C.LH(r - q, m, s, plain(X), plain(Y), plain(Z)));
    }
  }
  return out;
}

IdentitySides limit_hermite_reduction(const BuildContext& b,
                                      const IdentityParams& p, bool literal) {
  Classical C(b, p);
  int n = arg(p, "n"), m = arg(p, "m");
  IdentitySides out;
  out.lhs = C.LH(n, m, 2, plain(MPoly()), plain(y), plain(z));
  out.rhs = C.g(n, literal ? m : 2, plain(y), plain(z));
  return out;
}

IdentitySides limit_gh_connection(const BuildContext& b,
                                  const IdentityParams& p) {
  Classical C(b, p);
  int k = arg(p, "k"), l = arg(p, "l"), m = arg(p, "m");
  IdentitySides out;
  out.lhs = C.g(k + l, m, plain(xi), plain(y));
  for (int n = 0; n <= k; ++n) {
    for (int r = 0; r <= l; ++r) {
      out.rhs += C.times(C.binom(k, n) * C.binom(l, r),
                         C.diff_pow(xi, x, n + r) *
                             C.g(k + l - n - r, m, plain(x), plain(y)));
    }
  }
  return out;
}

IdentitySides limit_gh_single(const BuildContext& b, const IdentityParams& p) {
  Classical C(b, p);
  int n = arg(p, "n"), m = arg(p, "m");
  IdentitySides out;
  out.lhs = C.g(n, m, plain(xi), plain(y));
  for (int k = 0; k <= n; ++k) {
    out.rhs += C.times(C.binom(n, k), C.diff_pow(xi, x, k) *
                                          C.g(n - k, m, plain(x), plain(y)));
  }
  return out;
}

IdentitySides limit_gh_argument_sum(const BuildContext& b,
                                    const IdentityParams& p) {
  Classical C(b, p);
  int n = arg(p, "n"), m = arg(p, "m");
  IdentitySides out;
  out.lhs = C.g(n, m, C.sum(xi, x), plain(y));
  for (int k = 0; k <= n; ++k) {
    out.rhs += C.times(C.binom(n, k), Builder::power(xi, n - k) *
                                          C.g(k, m, plain(x), plain(y)));
  }
  return out;
}

IdentitySides limit_gh_product(const BuildContext& b, const IdentityParams& p,
                               bool zeta_eq_z) {
  Classical C(b, p);
  int n = arg(p, "n"), r = arg(p, "r"), m = arg(p, "m");
  IdentitySides out;
  out.lhs = C.g(n, m, plain(xi), plain(zeta_eq_z ? z : zeta)) *
            C.g(r, m, plain(Omega), plain(zeta_eq_z ? Z : U));
  for (int k = 0; k <= n; ++k) {
    for (int q = 0; q <= r; ++q) {
      Expansion head =
          zeta_eq_z ? C.diff_pow(xi, y, k) * C.diff_pow(Omega, Y, q)
                    : C.g(k, m, C.diff(xi, y), C.diff(zeta, z)) *
                          C.g(q, m, C.diff(Omega, Y), C.diff(U, Z));
      out.rhs += C.times(C.binom(n, k) * C.binom(r, q),
                         head * C.g(n - k, m, plain(y), plain(z)) *
                             C.g(r - q, m, plain(Y), plain(Z)));
    }
  }
  return out;
}

// ---- helper lemmas ---------------------------------------------------------

constexpr int kArraySide = 5;

// Random finitely supported array A(a, b) on [0, kArraySide)^2 with small
// rational entries, encoded as A(a, b) u^a T^b so every entry stays visible
// in the sums.
std::map<std::pair<int, int>, Rational> random_array(int trial, int salt) {
  std::mt19937 rng(static_cast<unsigned>(7919 * trial + 104729 * salt + 1));
  std::uniform_int_distribution<int> cell(0, kArraySide - 1);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::map<std::pair<int, int>, Rational> a;
  int entries = count(rng);
  for (int i = 0; i < entries; ++i) {
    int r = cell(rng), c = cell(rng);
    int nn = num(rng);
    a[{r, c}] = Rational(nn == 0 ? 1 : nn, den(rng));
  }
  return a;
}

Rational lookup(const std::map<std::pair<int, int>, Rational>& a, int i,
                int j) {
  auto it = a.find({i, j});
  return it == a.end() ? Rational(0) : it->second;
}

MPoly cell_term(const Rational& c, int i, int j) {
  return MPoly::monomial(c, {{u, i}, {T, j}});
}

IdentitySides lemma_floor_reindex(const BuildContext&, const IdentityParams& p) {
  int m = arg(p, "m");
  auto a = random_array(arg(p, "trial"), m);
  IdentitySides out = {unit(), unit()};
  out.lhs.poly = MPoly();
  out.rhs.poly = MPoly();
  for (const auto& [key, c] : a) out.lhs.poly += cell_term(c, key.first, key.second);
  int top = m * (kArraySide - 1) + kArraySide - 1;
  for (int n = 0; n <= top; ++n) {
    for (int k = 0; m * k <= n; ++k) {
      Rational c = lookup(a, k, n - m * k);
      if (!c.is_zero()) out.rhs.poly += cell_term(c, k, n - m * k);
    }
  }
  return out;
}

IdentitySides lemma_diagonal_reindex(const BuildContext&,
                                     const IdentityParams& p) {
  auto a = random_array(arg(p, "trial"), 0);
  IdentitySides out = {unit(), unit()};
  out.lhs.poly = MPoly();
  out.rhs.poly = MPoly();
  for (const auto& [key, c] : a) out.lhs.poly += cell_term(c, key.first, key.second);
  for (int q = 0; q <= 2 * (kArraySide - 1); ++q) {
    for (int s = 0; s <= q; ++s) {
      Rational c = lookup(a, s, q - s);
      if (!c.is_zero()) out.rhs.poly += cell_term(c, s, q - s);
    }
  }
  return out;
}

// sum_j F(j) (x +q y)^j/[j]! = sum_{j,s} F(j+s) q^{C(s,2)} x^j y^s/([j]![s]!)
IdentitySides lemma_jhc_series(const BuildContext& b, const IdentityParams& p) {
  Builder B(b);
  constexpr int kDegree = 8;
  std::mt19937 rng(static_cast<unsigned>(7919 * arg(p, "trial") + 31));
  std::uniform_int_distribution<int> where(0, kDegree);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rational> f(kDegree + 1, Rational(0));
  int entries = count(rng);
  for (int i = 0; i < entries; ++i) {
    int nn = num(rng);
    f[where(rng)] = Rational(nn == 0 ? 1 : nn, den(rng));
  }
  IdentitySides out;
  for (int j = 0; j <= kDegree; ++j) {
    if (f[j].is_zero()) continue;
    out.lhs += QScalar{f[j], QDegreeBound::one()} * B.inv_factorial(1, j) *
               B.jhc(x, y, j, JhcSign::plus);
  }
  for (int j = 0; j <= kDegree; ++j) {
    for (int s = 0; j + s <= kDegree; ++s) {
      if (f[j + s].is_zero()) continue;
      out.rhs += QScalar{f[j + s], QDegreeBound::one()} * B.qpow(choose2(s)) *
                 B.inv_factorial(1, j) * B.inv_factorial(1, s) *
                 (B.power(x, j) * B.power(y, s));
    }
  }
  return out;
}

IdentitySides lemma_binomial_exponents(const BuildContext&,
                                       const IdentityParams& p) {
  int l = arg(p, "l");
  IdentitySides out = {unit(), unit()};
  out.lhs.poly = MPoly();
  out.rhs.poly = MPoly();
  for (int r = 0; r <= l; ++r) {
    long left = choose2(r) + choose2(l - r) - choose2(l);
    long right = static_cast<long>(r) * (r - l);
    out.lhs.poly += MPoly::monomial(Rational(left), {{u, r}});
    out.rhs.poly += MPoly::monomial(Rational(right), {{u, r}});
  }
  return out;
}

// ---- the table -------------------------------------------------------------

using Build =
    std::function<IdentitySides(const BuildContext&, const IdentityParams&)>;

ParamSpec idx(const char* name) { return {name, ParamSource::index}; }
ParamSpec base(const char* name) { return {name, ParamSource::base}; }

CatalogEntry entry(std::string tag, std::string equation,
                   std::vector<ParamSpec> params, Build build) {
  CatalogEntry e;
  e.tag = std::move(tag);
  e.equation = std::move(equation);
  e.params = std::move(params);
  e.build = std::move(build);
  return e;
}

CatalogEntry classical(std::string tag, std::string equation,
                       std::vector<ParamSpec> params, Build build) {
  params.push_back({"route", ParamSource::route});
  CatalogEntry e = entry(std::move(tag), std::move(equation),
                         std::move(params), std::move(build));
  e.q_dependent = false;
  return e;
}

CatalogEntry alternate(CatalogEntry e, std::string group) {
  e.referee_group = std::move(group);
  e.alternate_reading = true;
  return e;
}

CatalogEntry refereed(CatalogEntry e, std::string group) {
  e.referee_group = std::move(group);
  return e;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };

  CatalogEntry gf2 = entry(
      "GF-2.17",
      "sum_n t^n/[n]_q! mL_n(x,y|q) = e_q(yt) eps_q^m(-x t^m)", {base("m")},
      gf_laguerre);
  gf2.uses_series = true;
  add(gf2);
  CatalogEntry gf3 = entry(
      "GF-3.6",
      "sum_n t^n/[n]_q! LH_n^(m,s)(x,y,z|q) = e_q(yt) E_{q^s}(z t^s) "
      "eps_q^m(-x t^m)",
      {base("m"), base("s")}, gf_lghp);
  gf3.uses_series = true;
  add(gf3);

  add(refereed(
      entry("T3.1-3.12",
            "LH_{k+l}^(m,s)(x,xi,z|q) = sum_{n,r} [k;n]_q [l;r]_q q^{r(r-l)} "
            "(xi -_q y)^{n+r} LH_{k+l-n-r}^(m,s)(x,y,z|q)",
            {idx("k"), idx("l"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return connection_lghp(b, p, false);
            }),
      "T3.1-3.12 subscript"));
  add(alternate(
      entry("T3.1-3.12:literal",
            "LH_{k+l}^(m,s)(x,xi,z|q) = sum_{n,r} [k;n]_q [l;r]_q q^{r(r-l)} "
            "(xi -_q y)^{n+r} G_{k+l-n-r}^s(y,z|q)",
            {idx("k"), idx("l"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return connection_lghp(b, p, true);
            }),
      "T3.1-3.12 subscript"));
  add(entry("E3.25",
            "LH_{k+l}^(m,s)(x,xi,zeta|q) = sum_{n,r} q^{r(r-l)} [k;n]_q "
            "[l;r]_q G_{n+r}^s(xi -_q y, zeta -_q z|q) "
            "LH_{k+l-n-r}^(m,s)(x,y,z|q)",
            {idx("k"), idx("l"), base("m"), base("s")},
            connection_lghp_two_shift));
  add(refereed(
      entry("T3.2-3.26",
            "LH_n^(m,s)(x,xi,zeta|q) LH_r^(m,s)(X,Omega,U|q) = sum_{k,p} "
            "[n;k]_q [r;p]_q G_k^s(xi -_q y, zeta -_q z|q) "
            "G_p^s(Omega -_q Y, U -_q Z|q) LH_{n-k}^(m,s)(x,y,z|q) "
            "LH_{r-p}^(m,s)(X,Y,Z|q)",
            {idx("n"), idx("r"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return product_lghp(b, p, false);
            }),
      "T3.2-3.26 binomials"));
  add(alternate(
      entry("T3.2-3.26:literal",
            "LH_n^(m,s)(x,xi,zeta|q) LH_r^(m,s)(X,Omega,U|q) = sum_{k,p} "
            "[k;n]_q [p;r]_q G_k^s(xi -_q y, zeta -_q z|q) "
            "G_p^s(Omega -_q Y, U -_q Z|q) LH_{n-k}^(m,s)(x,y,z|q) "
            "LH_{r-p}^(m,s)(X,Y,Z|q)",
            {idx("n"), idx("r"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return product_lghp(b, p, true);
            }),
      "T3.2-3.26 binomials"));

  add(entry("C4.1",
            "mL_{k+l}(x,xi|q) = sum_{n,r} [k;n]_q [l;r]_q q^{r(r-l)} "
            "(xi -_q y)^{n+r} mL_{k+l-n-r}(x,y|q)",
            {idx("k"), idx("l"), base("m")},
            [](const BuildContext& b, const IdentityParams& p) {
              return laguerre_connection(b, arg(p, "k"), arg(p, "l"),
                                         arg(p, "m"));
            }));
  add(entry("C4.2",
            "mL_k(x,xi|q) = sum_n [k;n]_q (xi -_q y)^n mL_{k-n}(x,y|q)",
            {idx("k"), base("m")},
            [](const BuildContext& b, const IdentityParams& p) {
              return laguerre_connection(b, arg(p, "k"), 0, arg(p, "m"));
            }));
  add(entry("C4.3",
            "mL_l(x,xi|q) = sum_r [l;r]_q q^{r(r-l)} (xi -_q y)^r "
            "mL_{l-r}(x,y|q)",
            {idx("l"), base("m")},
            [](const BuildContext& b, const IdentityParams& p) {
              return laguerre_connection(b, 0, arg(p, "l"), arg(p, "m"));
            }));
  add(entry("C4.4",
            "LH_n^(m,s)(x,xi,zeta|q) = sum_k [n;k]_q "
            "G_k^s(xi -_q y, zeta -_q z|q) LH_{n-k}^(m,s)(x,y,z|q)",
            {idx("n"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return lghp_single_shift(b, p, 0);
            }));
  add(entry("C4.5",
            "LH_n^(m,s)(x,xi,zeta|q) = sum_k [n;k]_q q^{k(k-n)} "
            "G_k^s(xi -_q y, zeta -_q z|q) LH_{n-k}^(m,s)(x,y,z|q)",
            {idx("n"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return lghp_single_shift(b, p, 1);
            }));
  add(entry("C4.6",
            "LH_n^(m,s)(x,xi +_q y,z|q) = sum_k [n;k]_q xi^k "
            "LH_{n-k}^(m,s)(x,y,z|q)",
            {idx("n"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return lghp_argument_sum(b, arg(p, "n"), arg(p, "m"),
                                       arg(p, "s"), 0);
            }));
  add(entry("C4.7",
            "LH_n^(m,s)(x,xi +_q y,z|q) = sum_k [n;k]_q q^{k(k-n)} xi^k "
            "LH_{n-k}^(m,s)(x,y,z|q)",
            {idx("n"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return lghp_argument_sum(b, arg(p, "n"), arg(p, "m"),
                                       arg(p, "s"), 1);
            }));
  add(entry("C4.8",
            "LH_n^(m,s)(x,xi,zeta +_q z|q) LH_r^(m,s)(X,Omega,U +_q Z|q) = "
            "sum_{k,p} [n;k]_q [r;p]_q (xi -_q y)^k (Omega -_q Y)^p "
            "LH_{n-k}^(m,s)(x,y,z|q) LH_{r-p}^(m,s)(X,Y,Z|q)",
            {idx("n"), idx("r"), base("m"), base("s")}, lghp_product_shifted));
  add(entry("C4.9",
            "LH_k^(m,s)(x,xi +_q y,zeta +_q z|q) = sum_n [k;n]_q "
            "G_n^s(xi,zeta|q) LH_{k-n}^(m,s)(x,y,z|q)",
            {idx("k"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return lghp_double_sum(b, arg(p, "k"), arg(p, "m"), arg(p, "s"),
                                     0);
            }));
  add(entry("C4.10",
            "LH_k^(m,s)(x,xi +_q y,z|q) = sum_n [k;n]_q xi^n "
            "LH_{k-n}^(m,s)(x,y,z|q)",
            {idx("k"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return lghp_argument_sum(b, arg(p, "k"), arg(p, "m"),
                                       arg(p, "s"), 0);
            }));
  add(entry("C4.11",
            "LH_l^(m,s)(x,xi +_q y,zeta +_q z|q) = sum_r [l;r]_q q^{r(r-l)} "
            "G_r^s(xi,zeta|q) LH_{l-r}^(m,s)(x,y,z|q)",
            {idx("l"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return lghp_double_sum(b, arg(p, "l"), arg(p, "m"), arg(p, "s"),
                                     1);
            }));
  add(entry("C4.12",
            "LH_l^(m,s)(x,xi +_q y,z|q) = sum_r [l;r]_q q^{r(r-l)} xi^r "
            "LH_{l-r}^(m,s)(x,y,z|q)",
            {idx("l"), base("m"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return lghp_argument_sum(b, arg(p, "l"), arg(p, "m"),
                                       arg(p, "s"), 1);
            }));
  add(entry("C4.13",
            "mL_{k+l}(x,xi|q) = sum_{n,r} [k;n]_q [l;r]_q q^{r(r-l)} "
            "(xi -_q y)^{n+r} mL_{k+l-n-r}(x,y|q)",
            {idx("k"), idx("l"), base("m")},
            [](const BuildContext& b, const IdentityParams& p) {
              return laguerre_connection(b, arg(p, "k"), arg(p, "l"),
                                         arg(p, "m"));
            }));
  add(entry("C4.14",
            "mL_n(x,xi|q) mL_r(X,Omega|q) = sum_{k,p} [n;k]_q [r;p]_q "
            "(xi -_q y)^k (Omega -_q Y)^p mL_{n-k}(x,y|q) mL_{r-p}(X,Y|q)",
            {idx("n"), idx("r"), base("m")}, laguerre_product));
  add(refereed(
      entry("C4.15",
            "G_{k+l}^s(xi,zeta|q) = sum_{n,r} [k;n]_q [l;r]_q q^{r(r-l)} "
            "G_{n+r}^s(xi -_q y, zeta -_q z/[s]_q|q) G_{k+l-n-r}^s(y,z|q)",
            {idx("k"), idx("l"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return gould_hopper_connection(b, p, 1);
            }),
      "C4.15 rescaling"));
  add(alternate(
      entry("C4.15:preamble",
            "G_{k+l}^s(xi,zeta|q) = sum_{n,r} [k;n]_q [l;r]_q q^{r(r-l)} "
            "G_{n+r}^s(xi -_q y, zeta -_q (-z/[s]_q)|q) G_{k+l-n-r}^s(y,z|q)",
            {idx("k"), idx("l"), base("s")},
            [](const BuildContext& b, const IdentityParams& p) {
              return gould_hopper_connection(b, p, -1);
            }),
      "C4.15 rescaling"));
  add(entry("C4.16",
            "H_{k+l}(xi,z|q) = sum_{n,r} [k;n]_q [l;r]_q q^{r(r-l)} "
            "(xi -_q y)^{n+r} H_{k+l-n-r}(y,z|q)",
            {idx("k"), idx("l")}, hermite_connection));
  add(entry("C4.17",
            "H_n(xi,z|q) = sum_k [n;k]_q (xi -_q y)^k H_{n-k}(y,z|q)",
            {idx("n")},
            [](const BuildContext& b, const IdentityParams& p) {
              return hermite_single(b, p, 0);
            }));
  add(entry("C4.18",
            "H_n(xi,z|q) = sum_k [n;k]_q q^{k(k-n)} (xi -_q y)^k "
            "H_{n-k}(y,z|q)",
            {idx("n")},
            [](const BuildContext& b, const IdentityParams& p) {
              return hermite_single(b, p, 1);
            }));
  add(refereed(entry("C4.19",
                     "H_n(xi +_q y,z|q) = sum_k [n;k]_q xi^k H_{n-k}(y,z|q)",
                     {idx("n")},
                     [](const BuildContext& b, const IdentityParams& p) {
                       return hermite_argument_sum(b, p, 0, true);
                     }),
               "C4.19 exponent"));
  add(alternate(
      entry("C4.19:literal",
            "H_n(xi +_q y,z|q) = sum_k [n;k]_q xi^{n-k} H_k(y,z|q)",
            {idx("n")},
            [](const BuildContext& b, const IdentityParams& p) {
              return hermite_argument_sum(b, p, 0, false);
            }),
      "C4.19 exponent"));
  add(refereed(
      entry("C4.20",
            "H_n(xi +_q y,z|q) = sum_k [n;k]_q q^{k(k-n)} xi^k H_{n-k}(y,z|q)",
            {idx("n")},
            [](const BuildContext& b, const IdentityParams& p) {
              return hermite_argument_sum(b, p, 1, true);
            }),
      "C4.20 exponent"));
  add(alternate(
      entry("C4.20:literal",
            "H_n(xi +_q y,z|q) = sum_k [n;k]_q q^{k(k-n)} xi^{n-k} "
            "H_k(y,z|q)",
            {idx("n")},
            [](const BuildContext& b, const IdentityParams& p) {
              return hermite_argument_sum(b, p, 1, false);
            }),
      "C4.20 exponent"));
  add(entry("C4.21",
            "H_n(xi,z|q) H_r(Omega,Z|q) = sum_{k,p} [n;k]_q [r;p]_q "
            "(xi -_q y)^k (Omega -_q Y)^p H_{n-k}(y,z|q) H_{r-p}(Y,Z|q)",
            {idx("n"), idx("r")}, hermite_product));

  add(classical("L4.22",
                "LH_{k+l}^(m,s)(x,xi,zeta) = sum_{n,r} C(k,n) C(l,r) "
                "g_{n+r}^s(xi-y, zeta-z) LH_{k+l-n-r}^(m,s)(x,y,z)",
                {idx("k"), idx("l"), base("m"), base("s")},
                [](const BuildContext& b, const IdentityParams& p) {
                  return limit_lghp_connection(b, p, false);
                }));
  add(classical("L4.23",
                "LH_n^(m,s)(x,xi,zeta) LH_r^(m,s)(X,Omega,U) = sum_{k,p} "
                "C(n,k) C(r,p) g_k^s(xi-y, zeta-z) g_p^s(Omega-Y, U-Z) "
                "LH_{n-k}^(m,s)(x,y,z) LH_{r-p}^(m,s)(X,Y,Z)",
                {idx("n"), idx("r"), base("m"), base("s")},
                [](const BuildContext& b, const IdentityParams& p) {
                  return limit_lghp_product(b, p, false);
                }));
  add(classical("L4.24",
                "LH_{k+l}^(m,s)(x,xi,z) = sum_{n,r} C(k,n) C(l,r) "
                "(xi-y)^{n+r} LH_{k+l-n-r}^(m,s)(x,y,z)",
                {idx("k"), idx("l"), base("m"), base("s")},
                [](const BuildContext& b, const IdentityParams& p) {
                  return limit_lghp_connection(b, p, true);
                }));
  add(classical("L4.25",
                "LH_n^(m,s)(x,xi,z) LH_r^(m,s)(X,Omega,Z) = sum_{k,p} "
                "C(n,k) C(r,p) (xi-y)^k (Omega-Y)^p LH_{n-k}^(m,s)(x,y,z) "
                "LH_{r-p}^(m,s)(X,Y,Z)",
                {idx("n"), idx("r"), base("m"), base("s")},
                [](const BuildContext& b, const IdentityParams& p) {
                  return limit_lghp_product(b, p, true);
                }));
  add(refereed(classical("L4.26", "LH_n^(m,2)(0,y,z|1) = g_n^2(y,z)",
                         {idx("n"), base("m")},
                         [](const BuildContext& b, const IdentityParams& p) {
                           return limit_hermite_reduction(b, p, false);
                         }),
               "L4.26 superscript"));
  add(alternate(classical("L4.26:literal", "LH_n^(m,2)(0,y,z|1) = g_n^m(y,z)",
                          {idx("n"), base("m")},
                          [](const BuildContext& b, const IdentityParams& p) {
                            return limit_hermite_reduction(b, p, true);
                          }),
                "L4.26 superscript"));
  add(classical("L4.27",
                "g_{k+l}^m(xi,y) = sum_{n,r} C(k,n) C(l,r) (xi-x)^{n+r} "
                "g_{k+l-n-r}^m(x,y)",
                {idx("k"), idx("l"), base("m")}, limit_gh_connection));
  add(classical("L4.28",
                "g_n^m(xi,y) = sum_k C(n,k) (xi-x)^k g_{n-k}^m(x,y)",
                {idx("n"), base("m")}, limit_gh_single));
  add(classical("L4.29",
                "g_n^m(xi+x,y) = sum_k C(n,k) xi^{n-k} g_k^m(x,y)",
                {idx("n"), base("m")}, limit_gh_argument_sum));
  add(classical("L4.30",
                "g_n^m(xi,zeta) g_r^m(Omega,U) = sum_{k,p} C(n,k) C(r,p) "
                "g_k^m(xi-y, zeta-z) g_p^m(Omega-Y, U-Z) g_{n-k}^m(y,z) "
                "g_{r-p}^m(Y,Z)",
                {idx("n"), idx("r"), base("m")},
                [](const BuildContext& b, const IdentityParams& p) {
                  return limit_gh_product(b, p, false);
                }));
  add(classical("L4.31",
                "g_n^m(xi,z) g_r^m(Omega,Z) = sum_{k,p} C(n,k) C(r,p) "
                "(xi-y)^k (Omega-Y)^p g_{n-k}^m(y,z) g_{r-p}^m(Y,Z)",
                {idx("n"), idx("r"), base("m")},
                [](const BuildContext& b, const IdentityParams& p) {
                  return limit_gh_product(b, p, true);
                }));

  CatalogEntry h14 = entry(
      "H3.14",
      "sum_j F(j) (x +_q y)^j/[j]_q! = sum_{j,s} F(j+s) q^{C(s,2)} "
      "x^j y^s/([j]_q! [s]_q!)",
      {{"trial", ParamSource::trial}}, lemma_jhc_series);
  add(h14);
  CatalogEntry h10 = entry(
      "H3.10",
      "sum_{n,k} A(k,n) = sum_n sum_{k <= n/m} A(k, n-mk)",
      {base("m"), {"trial", ParamSource::trial}}, lemma_floor_reindex);
  h10.q_dependent = false;
  add(h10);
  CatalogEntry h22 = entry("H3.22",
                           "sum_{p,s} A(p,s) = sum_p sum_{s <= p} A(s, p-s)",
                           {{"trial", ParamSource::trial}},
                           lemma_diagonal_reindex);
  h22.q_dependent = false;
  add(h22);
  CatalogEntry h24 = entry("H3.24",
                           "C(r,2) + C(l-r,2) - C(l,2) = r(r-l), 0 <= r <= l",
                           {idx("l")}, lemma_binomial_exponents);
  h24.q_dependent = false;
  add(h24);

  CatalogEntry r12 = entry(
      "R2.12",
      "rule 1: e_q(xt) E_q(yt) = e_q(xt +_q yt); rule 2: e_q(xt) E_q(-xt) = 1",
      {{"rule", ParamSource::rule}}, rule_jhc);
  r12.uses_series = true;
  add(r12);
  CatalogEntry r11 = entry(
      "R2.11", "e_q(xt) E_{q^m}(yt) = e_q(xt -_{q,q^m} yt)", {base("m")},
      rule_mixed);
  r11.uses_series = true;
  add(r11);
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> table = make_catalog();
  return table;
}

const CatalogEntry* find_entry(const std::string& tag) {
  for (const auto& e : catalog()) {
    if (e.tag == tag) return &e;
  }
  return nullptr;
}

}  // namespace qlgh

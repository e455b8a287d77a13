#include "qlgh/families.hpp"

#include "qlgh/error.hpp"
#include "qlgh/qops.hpp"

namespace qlgh {

void FamilySpec::validate() const {
  if (n < 0) throw DomainError("family degree must be >= 0");
  bool uses_m = kind != FamilyKind::q_hermite;
  bool uses_s = kind == FamilyKind::q_lghp;
  if (uses_m && m < 1) throw DomainError("family index m must be >= 1");
  if (uses_s && s < 1) throw DomainError("family index s must be >= 1");
}

namespace {

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

MPoly mono(const Rational& c, std::initializer_list<std::pair<Var, int>> p) {
  return MPoly::monomial(c, p);
}

// sum_k q^{m C(k,2)} / [k]_{q^m}! (D_x^{q^m})^{-k} (D_y^q)^{mk} f
MPoly apply_laguerre_operator(const QContext& ctx, int m, const MPoly& f) {
  QDiffOp dx(ctx, m, Var::x);
  QDiffOp dy(ctx, 1, Var::y);
  MPoly out;
  MPoly lowered = f;
  for (int k = 0; !lowered.is_zero(); ++k) {
    Rational c = ctx.power(m * choose2(k)) * ctx.inverse_q_factorial(m, k);
    out += dx.inverse_pow(static_cast<unsigned>(k), lowered) * c;
    for (int i = 0; i < m; ++i) lowered = dy.apply(lowered);
  }
  return out;
}

}  // namespace

MPoly classical_gh(int n, int m) {
  FamilySpec{FamilyKind::classical_gh, n, m, 1}.validate();
  MPoly out;
  Rational nf = factorial(n);
  for (int k = 0; m * k <= n; ++k) {
    Rational c = nf / (factorial(k) * factorial(n - m * k));
    out += mono(c, {{Var::x, n - m * k}, {Var::y, k}});
  }
  return out;
}

MPoly classical_2dlp(int n, int m) {
  FamilySpec{FamilyKind::q_2dlp, n, m, 1}.validate();
  MPoly out;
  Rational nf = factorial(n);
  for (int k = 0; m * k <= n; ++k) {
    Rational kf = factorial(k);
    Rational c = nf / (kf * kf * factorial(n - m * k));
    out += mono(c, {{Var::x, k}, {Var::y, n - m * k}});
  }
  return out;
}

MPoly classical_lghp(int n, int m, int s) {
  FamilySpec{FamilyKind::q_lghp, n, m, s}.validate();
  MPoly out;
  Rational nf = factorial(n);
  for (int k = 0; s * k <= n; ++k) {
    Rational c = nf / (factorial(k) * factorial(n - s * k));
    out += classical_2dlp(n - s * k, m) * mono(c, {{Var::z, k}});
  }
  return out;
}

MPoly q_gh(const QContext& ctx, int n, int m) {
  FamilySpec{FamilyKind::q_gh, n, m, 1}.validate();
  MPoly out;
  Rational nf = ctx.q_factorial(1, n);
  for (int k = 0; m * k <= n; ++k) {
    Rational c = nf * ctx.power(m * choose2(k)) *
                 ctx.inverse_q_factorial(1, n - m * k) *
                 ctx.inverse_q_semifactorial(m, k);
    if (k % 2 == 1) c = -c;
    out += mono(c, {{Var::x, n - m * k}, {Var::y, k}});
  }
  return out;
}

MPoly q_2dlp(const QContext& ctx, int n, int m) {
  FamilySpec{FamilyKind::q_2dlp, n, m, 1}.validate();
  MPoly out;
  Rational nf = ctx.q_factorial(1, n);
  for (int k = 0; m * k <= n; ++k) {
    Rational inv_k = ctx.inverse_q_factorial(m, k);
    Rational c = nf * ctx.power(m * choose2(k)) * inv_k * inv_k *
                 ctx.inverse_q_factorial(1, n - m * k);
    out += mono(c, {{Var::x, k}, {Var::y, n - m * k}});
  }
  return out;
}

MPoly q_2dlp_operational(const QContext& ctx, int n, int m) {
  FamilySpec{FamilyKind::q_2dlp, n, m, 1}.validate();
  return apply_laguerre_operator(ctx, m, MPoly::variable(Var::y).pow(n));
}

MPoly q_lghp(const QContext& ctx, int n, int m, int s) {
  FamilySpec{FamilyKind::q_lghp, n, m, s}.validate();
  MPoly out;
  Rational nf = ctx.q_factorial(1, n);
  for (int k = 0; s * k <= n; ++k) {
    Rational c = nf * ctx.power(s * choose2(k)) *
                 ctx.inverse_q_factorial(s, k) *
                 ctx.inverse_q_factorial(1, n - s * k);
    out += q_2dlp(ctx, n - s * k, m) * mono(c, {{Var::z, k}});
  }
  return out;
}

MPoly q_lghp_operational_a(const QContext& ctx, int n, int m, int s) {
  FamilySpec{FamilyKind::q_lghp, n, m, s}.validate();
  MPoly gh = substitute(
      q_gh(ctx, n, s),
      {{Var::x, MPoly::variable(Var::y)},
       {Var::y, MPoly::variable(Var::z) * -ctx.q_number(1, s)}});
  return apply_laguerre_operator(ctx, m, gh);
}

MPoly q_lghp_operational_b(const QContext& ctx, int n, int m, int s) {
  FamilySpec{FamilyKind::q_lghp, n, m, s}.validate();
  QDiffOp dy(ctx, 1, Var::y);
  MPoly out;
  MPoly lowered = q_2dlp(ctx, n, m);
  MPoly z = MPoly::variable(Var::z);
  for (int k = 0; !lowered.is_zero(); ++k) {
    Rational c = ctx.power(s * choose2(k)) * ctx.inverse_q_factorial(s, k);
    out += z.pow(static_cast<unsigned>(k)) * lowered * c;
    for (int i = 0; i < s; ++i) lowered = dy.apply(lowered);
  }
  return out;
}

MPoly q_hermite(const QContext& ctx, int n) {
  FamilySpec{FamilyKind::q_hermite, n, 1, 1}.validate();
  MPoly out;
  Rational nf = ctx.q_factorial(1, n);
  for (int k = 0; 2 * k <= n; ++k) {
    Rational c = nf * ctx.power(2 * choose2(k)) *
                 ctx.inverse_q_factorial(2, k) *
                 ctx.inverse_q_factorial(1, n - 2 * k);
    out += mono(c, {{Var::y, n - 2 * k}, {Var::z, k}});
  }
  return out;
}

MPoly build_family(const QContext& ctx, const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::classical_gh:
      return classical_gh(spec.n, spec.m);
    case FamilyKind::q_gh:
      return q_gh(ctx, spec.n, spec.m);
    case FamilyKind::q_2dlp:
      return q_2dlp(ctx, spec.n, spec.m);
    case FamilyKind::q_lghp:
      return q_lghp(ctx, spec.n, spec.m, spec.s);
    case FamilyKind::q_hermite:
      return q_hermite(ctx, spec.n);
  }
  throw DomainError("unknown family kind");
}

namespace {

QDegreeBound laguerre_bound(int n, int m) {
  QDegreeBound out;
  for (int k = 0; m * k <= n; ++k) {
    QDegreeBound inv_k = QDegreeBound::inverse_q_factorial(m, k);
    out.join(QDegreeBound::q_factorial(1, n) *
             QDegreeBound::power(m * choose2(k)) * inv_k * inv_k *
             QDegreeBound::inverse_q_factorial(1, n - m * k));
  }
  return out;
}

}  // namespace

QDegreeBound family_bound(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  QDegreeBound out;
  switch (spec.kind) {
    case FamilyKind::classical_gh:
      return QDegreeBound::one();
    case FamilyKind::q_gh:
      for (int k = 0; spec.m * k <= n; ++k) {
        QDegreeBound term = QDegreeBound::q_factorial(1, n) *
                            QDegreeBound::power(spec.m * choose2(k)) *
                            QDegreeBound::inverse_q_factorial(1, n - spec.m * k);
        for (int l = 1; l <= k; ++l) {
          term *= QDegreeBound::inverse_q_number(1, spec.m * l);
        }
        out.join(term);
      }
      return out;
    case FamilyKind::q_2dlp:
      return laguerre_bound(n, spec.m);
    case FamilyKind::q_lghp:
      for (int k = 0; spec.s * k <= n; ++k) {
        out.join(QDegreeBound::q_factorial(1, n) *
                 QDegreeBound::power(spec.s * choose2(k)) *
                 QDegreeBound::inverse_q_factorial(spec.s, k) *
                 QDegreeBound::inverse_q_factorial(1, n - spec.s * k) *
                 laguerre_bound(n - spec.s * k, spec.m));
      }
      return out;
    case FamilyKind::q_hermite:
      for (int k = 0; 2 * k <= n; ++k) {
        out.join(QDegreeBound::q_factorial(1, n) *
                 QDegreeBound::power(2 * choose2(k)) *
                 QDegreeBound::inverse_q_factorial(2, k) *
                 QDegreeBound::inverse_q_factorial(1, n - 2 * k));
      }
      return out;
  }
  throw DomainError("unknown family kind");
}

std::string family_label(const FamilySpec& spec) {
  auto n = std::to_string(spec.n);
  auto m = std::to_string(spec.m);
  auto s = std::to_string(spec.s);
  switch (spec.kind) {
    case FamilyKind::classical_gh:
      return "gh(" + n + "," + m + ")";
    case FamilyKind::q_gh:
      return "qgh(" + n + "," + m + ")";
    case FamilyKind::q_2dlp:
      return "L(" + n + "," + m + ")";
    case FamilyKind::q_lghp:
      return "LH(" + n + "," + m + "," + s + ")";
    case FamilyKind::q_hermite:
      return "H(" + n + ")";
  }
  return "?";
}

std::string family_latex(const FamilySpec& spec) {
  auto n = std::to_string(spec.n);
  auto m = std::to_string(spec.m);
  auto s = std::to_string(spec.s);
  switch (spec.kind) {
    case FamilyKind::classical_gh:
      return "g_{" + n + "}^{" + m + "}(x,y)";
    case FamilyKind::q_gh:
      return "\\mathcal{G}_{" + n + "}^{" + m + "}(x,y|q)";
    case FamilyKind::q_2dlp:
      return "{}_{" + m + "}L_{" + n + "}(x,y|q)";
    case FamilyKind::q_lghp:
      return "{}_{L}H_{" + n + "}^{(" + m + "," + s + ")}(x,y,z|q)";
    case FamilyKind::q_hermite:
      return "H_{" + n + "}(y,z|q)";
  }
  return "?";
}

MPoly FamilyCache::get(const FamilySpec& spec) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(spec); it != table_.end()) return it->second;
  }
  MPoly value = build_family(ctx_, spec);
  std::lock_guard lock(mutex_);
  return table_.emplace(spec, std::move(value)).first->second;
}

}  // namespace qlgh

#include "qlgh/qops.hpp"

#include <optional>
#include <vector>

#include "qlgh/error.hpp"

namespace qlgh {

QDiffOp::QDiffOp(const QContext& ctx, int base_exp, Var target)
    : ctx_(ctx), base_exp_(base_exp), target_(target) {
  if (base_exp < 1) throw DomainError("q-difference base exponent must be >= 1");
  if (ctx.q().pow(base_exp).is_one()) {
    throw DomainError("q-difference operator undefined for base q^" +
                      std::to_string(base_exp) + " = 1");
  }
}

MPoly QDiffOp::apply(const MPoly& p) const {
  MPoly out;
  std::size_t slot = index(target_);
  for (const auto& [e, c] : p.terms()) {
    int n = e[slot];
    if (n == 0) continue;
    Exponents lowered = e;
    lowered[slot] = static_cast<std::uint16_t>(n - 1);
    out.add_term(lowered, c * ctx_.q_number(base_exp_, n));
  }
  return out;
}

MPoly QDiffOp::inverse_pow(unsigned n, const MPoly& p) const {
  if (n == 0) return p;
  MPoly out;
  std::size_t slot = index(target_);
  for (const auto& [e, c] : p.terms()) {
    int k = e[slot];
    Exponents raised = e;
    raised[slot] = static_cast<std::uint16_t>(k + static_cast<int>(n));
    Rational ratio = ctx_.q_factorial(base_exp_, k) *
                     ctx_.inverse_q_factorial(base_exp_, k + static_cast<int>(n));
    out.add_term(raised, c * ratio);
  }
  return out;
}

namespace {

// powers[i] = base^i for i <= n.
std::vector<MPoly> power_table(const MPoly& base, int n) {
  std::vector<MPoly> powers;
  powers.reserve(n + 1);
  powers.emplace_back(1);
  for (int i = 1; i <= n; ++i) powers.push_back(powers.back() * base);
  return powers;
}

}  // namespace

MPoly jhc_pow(const QContext& ctx, const MPoly& a, const MPoly& b, int n,
              JhcSign sign) {
  if (n < 0) throw DomainError("negative JHC power");
  MPoly signed_b = sign == JhcSign::minus ? -b : b;
  auto pa = power_table(a, n);
  auto pb = power_table(signed_b, n);
  MPoly out;
  for (int k = 0; k <= n; ++k) {
    Rational c = ctx.q_binomial(1, n, k) * ctx.power(choose2(k));
    out += pa[n - k] * pb[k] * c;
  }
  return out;
}

MPoly mixed_sub_pow(const QContext& ctx, const MPoly& a, const MPoly& b,
                    int m, int n) {
  if (n < 0) throw DomainError("negative mixed power");
  if (n == 0) return MPoly(1);
  auto pa = power_table(a, n);
  auto pb = power_table(b, n);
  Rational nf = ctx.q_factorial(1, n);
  MPoly out;
  for (int k = 0; k <= n; ++k) {
    Rational c = nf * ctx.power(m * choose2(k)) *
                 ctx.inverse_q_factorial(1, n - k) *
                 ctx.inverse_q_factorial(m, k);
    if (k % 2 == 1) c = -c;
    out += pa[n - k] * pb[k] * c;
  }
  return out;
}

MPoly compose_jhc(const QContext& ctx, const CoeffSeq& f, const MPoly& a,
                  const MPoly& b, JhcSign sign) {
  MPoly out;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (f[n].is_zero()) continue;
    out += f[n] * jhc_pow(ctx, a, b, static_cast<int>(n), sign);
  }
  return out;
}

SlotArg SlotArg::plain(MPoly p, QDegreeBound bound) {
  SlotArg s;
  s.kind = Kind::plain;
  s.first = std::move(p);
  s.first_bound = std::move(bound);
  return s;
}

SlotArg SlotArg::jhc(MPoly a, MPoly b, JhcSign sign, QDegreeBound a_bound,
                     QDegreeBound b_bound) {
  SlotArg s;
  s.kind = Kind::jhc;
  s.first = std::move(a);
  s.second = std::move(b);
  s.sign = sign;
  s.first_bound = std::move(a_bound);
  s.second_bound = std::move(b_bound);
  return s;
}

MPoly SlotArg::power(const QContext& ctx, int exponent) const {
  if (kind == Kind::plain) return first.pow(static_cast<unsigned>(exponent));
  return jhc_pow(ctx, first, second, exponent, sign);
}

QDegreeBound SlotArg::power_bound(int max_exponent) const {
  QDegreeBound out;
  for (int e = 0; e <= max_exponent; ++e) {
    if (kind == Kind::plain) {
      out.join(first_bound.pow(e));
      continue;
    }
    for (int k = 0; k <= e; ++k) {
      out.join(QDegreeBound::q_binomial(1, e, k) *
               QDegreeBound::power(choose2(k)) * first_bound.pow(e - k) *
               second_bound.pow(k));
    }
  }
  return out;
}

MPoly compose_slots(const QContext& ctx, const MPoly& p,
                    const std::map<Var, SlotArg>& slots) {
  if (slots.empty()) return p;
  std::map<Var, std::vector<std::optional<MPoly>>> cache;
  auto power_of = [&](Var v, int e) -> const MPoly& {
    auto& list = cache[v];
    if (static_cast<int>(list.size()) <= e) list.resize(e + 1);
    if (!list[e]) list[e] = slots.at(v).power(ctx, e);
    return *list[e];
  };
  MPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents kept = e;
    MPoly term = MPoly::monomial(c, Exponents{});
    for (const auto& [v, arg] : slots) {
      int power = e[index(v)];
      kept[index(v)] = 0;
      if (power == 0) continue;
      term *= power_of(v, power);
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    out += term * MPoly::monomial(Rational(1), kept);
  }
  return out;
}

QDegreeBound compose_slots_bound(const QDegreeBound& coeff_bound,
                                 const std::map<Var, SlotArg>& slots,
                                 int max_exponent) {
  QDegreeBound out = coeff_bound;
  for (const auto& [v, arg] : slots) out *= arg.power_bound(max_exponent);
  return out;
}

}  // namespace qlgh

#include "qlgh/qseries.hpp"

#include <algorithm>

#include "qlgh/error.hpp"

namespace qlgh {

TSeries::TSeries(unsigned order) : coeffs_(order + 1) {}

TSeries::TSeries(unsigned order, std::vector<MPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
  for (const auto& c : coeffs_) {
    if (c.depends_on(Var::t)) {
      throw DomainError("series coefficients must not contain t");
    }
  }
}

TSeries TSeries::one(unsigned order) {
  TSeries s(order);
  s.coeffs_[0] = MPoly(1);
  return s;
}

const MPoly& TSeries::coeff(unsigned n) const {
  if (n > order()) {
    throw DomainError("coefficient t^" + std::to_string(n) +
                      " beyond truncation order " + std::to_string(order()));
  }
  return coeffs_[n];
}

void TSeries::set_coeff(unsigned n, MPoly value) {
  if (n > order()) throw DomainError("coefficient beyond truncation order");
  coeffs_[n] = std::move(value);
}

TSeries TSeries::truncated(unsigned order) const {
  std::vector<MPoly> c(coeffs_.begin(),
                       coeffs_.begin() + std::min<std::size_t>(
                                             order + 1, coeffs_.size()));
  return TSeries(std::min(order, this->order()), std::move(c));
}

TSeries& TSeries::operator+=(const TSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  unsigned order = std::min(a.order(), b.order());
  TSeries out(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

namespace {

template <typename TermFn>
TSeries kernel(const MPoly& c, unsigned p, unsigned N, TermFn scalar) {
  if (c.depends_on(Var::t)) {
    throw DomainError("kernel argument must be free of t");
  }
  TSeries out = TSeries::one(N);
  if (c.is_zero()) return out;
  if (p == 0) {
    throw DomainError("kernel argument c*t^0 with c != 0 has no truncation");
  }
  MPoly power(1);
  for (unsigned k = 1; k * p <= N; ++k) {
    power *= c;
    out.set_coeff(k * p, power * scalar(static_cast<int>(k)));
  }
  return out;
}

}  // namespace

TSeries series_eq(const QContext& ctx, const MPoly& c, unsigned p,
                  unsigned N) {
  return kernel(c, p, N,
                [&](int k) { return ctx.inverse_q_factorial(1, k); });
}

TSeries series_EQm(const QContext& ctx, int m, const MPoly& c, unsigned p,
                   unsigned N) {
  return kernel(c, p, N, [&](int k) {
    return ctx.power(m * choose2(k)) * ctx.inverse_q_factorial(m, k);
  });
}

TSeries series_bessel_tricomi(const QContext& ctx, int m, unsigned order_n,
                              const MPoly& c, unsigned p, unsigned N) {
  // The k = 0 term is 1/[n]_{q^m}!, not 1, for a positive order.
  TSeries out = kernel(c, p, N, [&](int k) {
    Rational v = ctx.power(m * choose2(k)) * ctx.inverse_q_factorial(m, k) *
                 ctx.inverse_q_factorial(m, static_cast<int>(order_n) + k);
    return k % 2 == 1 ? -v : v;
  });
  out.set_coeff(0, MPoly(ctx.inverse_q_factorial(m, static_cast<int>(order_n))));
  return out;
}

QDegreeBound eq_term_bound(int k) {
  return QDegreeBound::inverse_q_factorial(1, k);
}

QDegreeBound EQm_term_bound(int m, int k) {
  return QDegreeBound::power(m * choose2(k)) *
         QDegreeBound::inverse_q_factorial(m, k);
}

QDegreeBound bessel_tricomi_term_bound(int m, int order_n, int k) {
  return QDegreeBound::power(m * choose2(k)) *
         QDegreeBound::inverse_q_factorial(m, k) *
         QDegreeBound::inverse_q_factorial(m, order_n + k);
}

}  // namespace qlgh

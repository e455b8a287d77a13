#include "qlgh/mpoly.hpp"

#include <algorithm>
#include <vector>

#include "qlgh/error.hpp"
#include "qlgh/render.hpp"

namespace qlgh {

int total_degree(const Exponents& e) {
  int sum = 0;
  for (auto v : e) sum += v;
  return sum;
}

Exponents make_exponents(std::initializer_list<std::pair<Var, int>> powers) {
  Exponents e{};
  for (const auto& [v, p] : powers) {
    if (p < 0) throw DomainError("negative exponent");
    e[index(v)] = static_cast<std::uint16_t>(e[index(v)] + p);
  }
  return e;
}

bool GradedLexGreater::operator()(const Exponents& a,
                                  const Exponents& b) const {
  int da = qlgh::total_degree(a);
  int db = qlgh::total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::variable(Var v) {
  Exponents e{};
  e[index(v)] = 1;
  return monomial(Rational(1), e);
}

MPoly MPoly::monomial(const Rational& coeff, const Exponents& e) {
  MPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(e, coeff);
  return p;
}

MPoly MPoly::monomial(const Rational& coeff,
                      std::initializer_list<std::pair<Var, int>> powers) {
  return monomial(coeff, make_exponents(powers));
}

int MPoly::total_degree() const {
  // The first term has the largest total degree.
  return terms_.empty() ? 0 : qlgh::total_degree(terms_.begin()->first);
}

int MPoly::degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[index(v)]);
  return d;
}

Rational MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_term() const { return coefficient(Exponents{}); }

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(1);
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string MPoly::to_string() const { return render_text(*this); }

MPoly substitute(const MPoly& p, const std::map<Var, MPoly>& bindings) {
  if (bindings.empty()) return p;
  // powers[v][e] = bindings[v]^e, filled lazily.
  std::map<Var, std::vector<MPoly>> powers;
  auto power_of = [&](Var v, int e) -> const MPoly& {
    auto& list = powers[v];
    if (list.empty()) list.emplace_back(1);
    while (static_cast<int>(list.size()) <= e) {
      list.push_back(list.back() * bindings.at(v));
    }
    return list[e];
  };
  MPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents kept = e;
    MPoly term(1);
    for (const auto& [v, image] : bindings) {
      int power = e[index(v)];
      if (power == 0) continue;
      kept[index(v)] = 0;
      term *= power_of(v, power);
    }
    out += term * MPoly::monomial(c, kept);
  }
  return out;
}

Rational eval_rational(const MPoly& p, const std::map<Var, Rational>& point) {
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (Var v : kAllVars) {
      int power = e[index(v)];
      if (power == 0) continue;
      auto it = point.find(v);
      if (it == point.end()) {
        throw DomainError("no value bound for variable " +
                          std::string(var_name(v)));
      }
      term *= it->second.pow(power);
    }
    sum += term;
  }
  return sum;
}

}  // namespace qlgh

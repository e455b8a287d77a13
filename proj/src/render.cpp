#include "qlgh/render.hpp"

#include <sstream>

#include "qlgh/error.hpp"

namespace qlgh {

namespace {

std::string monomial_text(const Exponents& e) {
  std::string out;
  for (Var v : kAllVars) {
    int power = e[index(v)];
    if (power == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

std::string monomial_latex(const Exponents& e) {
  std::string out;
  for (Var v : kAllVars) {
    int power = e[index(v)];
    if (power == 0) continue;
    if (!out.empty()) out += ' ';
    out += var_latex(v);
    if (power > 1) out += "^{" + std::to_string(power) + "}";
  }
  return out;
}

template <typename CoeffFn, typename MonoFn>
std::string render_terms(const MPoly& p, CoeffFn coeff, MonoFn mono,
                         const char* joiner) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = c.abs();
    std::string m = mono(e);
    if (m.empty()) {
      out += coeff(magnitude);
    } else if (magnitude.is_one()) {
      out += m;
    } else {
      out += coeff(magnitude) + joiner + m;
    }
  }
  return out;
}

}  // namespace

std::string render_text(const MPoly& p) {
  return render_terms(
      p, [](const Rational& r) { return r.to_string(); }, monomial_text, "*");
}

std::string render_latex(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  std::string sign = r.sign() < 0 ? "-" : "";
  Rational a = r.abs();
  return sign + "\\frac{" + a.numerator() + "}{" + a.denominator() + "}";
}

std::string render_latex(const MPoly& p) {
  return render_terms(
      p, [](const Rational& r) { return render_latex(r); }, monomial_latex,
      " ");
}

nlohmann::ordered_json to_json(const MPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (Var v : kAllVars) {
      if (e[index(v)] > 0) exps[std::string(var_name(v))] = e[index(v)];
    }
    terms.push_back({{"coeff", c.to_string()}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

MPoly mpoly_from_json(const nlohmann::ordered_json& j) {
  MPoly out;
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("polynomial JSON needs a \"terms\" array", 0);
  }
  for (const auto& term : j["terms"]) {
    Rational c = Rational::parse(term.at("coeff").get<std::string>());
    Exponents e{};
    for (const auto& [name, power] : term.at("exps").items()) {
      auto v = parse_var(name);
      if (!v) throw ParseError("unknown variable '" + name + "'", 0);
      e[index(*v)] = power.get<std::uint16_t>();
    }
    out.add_term(e, c);
  }
  return out;
}

}  // namespace qlgh

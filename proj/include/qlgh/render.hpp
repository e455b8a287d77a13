#pragma once

#include <json.hpp>
#include <string>

#include "qlgh/mpoly.hpp"

namespace qlgh {

/// `y^2 + 3/2*x + 3/2*z`: graded-lex term order, explicit `^` powers,
/// rationals as `a/b`, unit coefficients omitted, `0` for the zero polynomial.
std::string render_text(const MPoly& p);

/// Display form: `y^{2} + \frac{3}{2} x + \frac{3}{2} z`.
std::string render_latex(const MPoly& p);
std::string render_latex(const Rational& r);

/// `{"terms": [{"coeff": "3/2", "exps": {"x": 1}}, ...]}` in canonical order.
nlohmann::ordered_json to_json(const MPoly& p);

/// Inverse of to_json. ParseError on unknown variables or bad coefficients.
MPoly mpoly_from_json(const nlohmann::ordered_json& j);

}  // namespace qlgh

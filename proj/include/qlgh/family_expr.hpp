#pragma once

#include <string>

#include "qlgh/error.hpp"
#include "qlgh/families.hpp"

namespace qlgh {

/// Largest degree and index the expression parser accepts.
inline constexpr int kMaxFamilyDegree = 64;
inline constexpr int kMaxFamilyIndex = 32;

/// Parses `gh(n,m)`, `qgh(n,m)`, `L(n,m)`, `LH(n,m,s)` or `H(n)`, with
/// optional blanks around tokens. ParseError carries the offending span.
FamilySpec parse_family_expr(const std::string& source);

/// Family kind from its bare name (`gh`, `qgh`, `L`, `LH`, `H`).
FamilyKind parse_family_name(const std::string& name);

/// The source line with a caret run under the error span, e.g.
///   error: expected ','
///     LH(2 2,2)
///         ^
std::string caret_diagnostic(const std::string& source, const ParseError& e);

}  // namespace qlgh

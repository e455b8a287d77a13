#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qlgh {

/// The closed registry of indeterminates. Declaration order is the
/// lexicographic order used for canonical term ordering.
enum class Var : std::uint8_t { x, y, z, xi, zeta, X, Y, Z, Omega, U, t, u, T };

inline constexpr std::size_t kVarCount = 13;

inline constexpr std::array<Var, kVarCount> kAllVars = {
    Var::x, Var::y, Var::z,     Var::xi, Var::zeta, Var::X, Var::Y,
    Var::Z, Var::Omega, Var::U, Var::t,  Var::u,    Var::T};

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

/// ASCII name used in text and JSON output (`xi`, `zeta`, `Omega`, ...).
std::string_view var_name(Var v);
std::string_view var_latex(Var v);

/// Accepts the ASCII names and the Greek letters themselves (UTF-8).
std::optional<Var> parse_var(std::string_view name);

}  // namespace qlgh

#include "qlgh/var.hpp"

namespace qlgh {

namespace {

struct VarNames {
  std::string_view ascii;
  std::string_view latex;
  std::string_view unicode;
};

constexpr std::array<VarNames, kVarCount> kNames = {{
    {"x", "x", "x"},
    {"y", "y", "y"},
    {"z", "z", "z"},
    {"xi", "\\xi", "ξ"},
    {"zeta", "\\zeta", "ζ"},
    {"X", "X", "X"},
    {"Y", "Y", "Y"},
    {"Z", "Z", "Z"},
    {"Omega", "\\Omega", "Ω"},
    {"U", "U", "U"},
    {"t", "t", "t"},
    {"u", "u", "u"},
    {"T", "T", "T"},
}};

}  // namespace

std::string_view var_name(Var v) { return kNames[index(v)].ascii; }

std::string_view var_latex(Var v) { return kNames[index(v)].latex; }

std::optional<Var> parse_var(std::string_view name) {
  for (Var v : kAllVars) {
    const auto& n = kNames[index(v)];
    if (name == n.ascii || name == n.unicode) return v;
  }
  return std::nullopt;
}

}  // namespace qlgh

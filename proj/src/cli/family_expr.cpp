#include "qlgh/family_expr.hpp"

#include <cctype>
#include <vector>

namespace qlgh {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  FamilySpec parse() {
    skip_blanks();
    std::size_t name_at = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    std::string name = s_.substr(name_at, pos_ - name_at);
    if (name.empty()) {
      throw ParseError("expected a family name (gh, qgh, L, LH, H)", name_at);
    }
    FamilyKind kind;
    try {
      kind = parse_family_name(name);
    } catch (const ParseError&) {
      throw ParseError("unknown family '" + name + "'", name_at, name.size());
    }
    std::size_t arity = kind == FamilyKind::q_hermite ? 1
                        : kind == FamilyKind::q_lghp  ? 3
                                                      : 2;
    skip_blanks();
    expect('(');
    std::vector<int> args;
    std::vector<std::size_t> spans;
    for (;;) {
      skip_blanks();
      spans.push_back(pos_);
      args.push_back(integer());
      skip_blanks();
      if (peek() == ')') break;
      if (peek() != ',') {
        throw ParseError("expected ',' or ')'", pos_);
      }
      ++pos_;
    }
    std::size_t close_at = pos_;
    ++pos_;
    skip_blanks();
    if (pos_ != s_.size()) {
      throw ParseError("unexpected trailing input", pos_, s_.size() - pos_);
    }
    if (args.size() != arity) {
      throw ParseError(name + " takes " + std::to_string(arity) +
                           (arity == 1 ? " argument" : " arguments") +
                           ", got " + std::to_string(args.size()),
                       name_at, close_at + 1 - name_at);
    }
    FamilySpec spec{kind, args[0], 1, 1};
    check_range(args[0], 0, kMaxFamilyDegree, "degree", spans[0]);
    if (arity >= 2) {
      spec.m = args[1];
      check_range(args[1], 1, kMaxFamilyIndex, "index", spans[1]);
    }
    if (arity == 3) {
      spec.s = args[2];
      check_range(args[2], 1, kMaxFamilyIndex, "index", spans[2]);
    }
    return spec;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_blanks() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  int integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::size_t digits = pos_ - start;
    if (digits == 0 || (digits == 1 && !std::isdigit(static_cast<unsigned char>(s_[start])))) {
      pos_ = start;
      throw ParseError("expected an integer", start);
    }
    if (digits > 9) {
      throw ParseError("integer out of range", start, digits);
    }
    return std::stoi(s_.substr(start, digits));
  }

  void check_range(int value, int lo, int hi, const char* what,
                   std::size_t at) const {
    if (value < lo || value > hi) {
      std::size_t len = 1;
      while (at + len < s_.size() && s_[at + len] != ',' && s_[at + len] != ')' &&
             !std::isspace(static_cast<unsigned char>(s_[at + len]))) {
        ++len;
      }
      throw ParseError(std::string(what) + " must lie in " + std::to_string(lo) +
                           ".." + std::to_string(hi),
                       at, len);
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilyKind parse_family_name(const std::string& name) {
  if (name == "gh") return FamilyKind::classical_gh;
  if (name == "qgh") return FamilyKind::q_gh;
  if (name == "L") return FamilyKind::q_2dlp;
  if (name == "LH") return FamilyKind::q_lghp;
  if (name == "H") return FamilyKind::q_hermite;
  throw ParseError("unknown family '" + name + "'", 0, name.size());
}

FamilySpec parse_family_expr(const std::string& source) {
  return Parser(source).parse();
}

std::string caret_diagnostic(const std::string& source, const ParseError& e) {
  std::string line;
  for (char c : source) line += (c == '\n' || c == '\t') ? ' ' : c;
  std::size_t at = std::min(e.offset(), line.size());
  std::size_t len = std::max<std::size_t>(1, e.length());
  return std::string("error: ") + e.what() + "\n  " + line + "\n  " +
         std::string(at, ' ') + std::string(len, '^') + "\n";
}

}  // namespace qlgh

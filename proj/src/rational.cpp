#include "qlgh/rational.hpp"

#include <cctype>

#include "qlgh/error.hpp"

namespace qlgh {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

namespace {

// Returns the end offset of a run of digits starting at `pos`.
std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  return pos;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal", 0);
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') ++pos;
  std::size_t num_end = scan_digits(text, pos);
  if (num_end == pos) {
    throw ParseError("expected digits in rational literal", pos);
  }
  std::string num(text.substr(0, num_end));
  if (num[0] == '+') num.erase(0, 1);
  std::string den = "1";
  std::size_t end = num_end;
  if (end < text.size() && text[end] == '/') {
    std::size_t den_end = scan_digits(text, end + 1);
    if (den_end == end + 1) {
      throw ParseError("expected denominator digits after '/'", end + 1);
    }
    den = std::string(text.substr(end + 1, den_end - end - 1));
    end = den_end;
  }
  if (end != text.size()) {
    throw ParseError("unexpected character in rational literal", end);
  }
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator", num_end + 1);
  return Rational(mpq_class(mpz_class(num), d));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace qlgh

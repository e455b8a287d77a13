#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlgh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (k > n in a binomial, q = 1
/// for a q-difference operator, a missing evaluation binding, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A q-factorial that must be inverted vanishes at the chosen q.
class VanishingFactorError : public Error {
 public:
  VanishingFactorError(int base_exp, int n, const std::string& q_text)
      : Error("q-integer [" + std::to_string(n) + "]_{q^" +
              std::to_string(base_exp) + "} vanishes at q = " + q_text),
        base_exp_(base_exp),
        n_(n) {}

  int base_exp() const { return base_exp_; }
  int n() const { return n_; }

 private:
  int base_exp_;
  int n_;
};

/// Malformed textual input. `offset`/`length` locate the offending span in
/// the source string so callers can print a caret diagnostic.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::size_t length = 1)
      : Error(message), offset_(offset), length_(length) {}

  std::size_t offset() const { return offset_; }
  std::size_t length() const { return length_; }

 private:
  std::size_t offset_;
  std::size_t length_;
};

}  // namespace qlgh

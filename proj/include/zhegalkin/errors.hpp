#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zhegalkin {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed `.tt`, `.anf` or `.qc` text. `line()` is 1-based, 0 when the
/// problem is not tied to a single line (e.g. a missing row).
class ParseError : public Error {
 public:
  enum class Kind { kBadHeader, kRowCount, kDigitRange, kNonPrimeModulus, kSyntax };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// A precondition of an operation does not hold: non-prime modulus, mixed
/// moduli, k != 2 where binary logic is required, malformed gate, etc.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An input exceeds one of the desk-scale size guards.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace zhegalkin

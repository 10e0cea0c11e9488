#pragma once

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zhegalkin/prime_field.hpp"

namespace zhegalkin {

/// Upper bound on k^n for truth tables and coefficient columns.
inline constexpr std::uint64_t kMaxGridRows = 10'000'000;

/// k^n, throwing SizeLimitError when it exceeds `limit`.
std::uint64_t checked_power(Digit k, std::size_t n, std::uint64_t limit);

/// A tuple of n digits in [0, k). Used both for input assignments
/// (x_1, ..., x_n) and for monomial degree vectors (d_1, ..., d_n).
class Assignment {
 public:
  Assignment(Modulus k, std::vector<Digit> digits);

  const Modulus& modulus() const noexcept { return k_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  Modulus k_;
  std::vector<Digit> digits_;
};

/// Row index of an assignment: sum of x_i * k^(n-i), x_1 most significant.
std::uint64_t index_of(const Assignment& a);

/// Inverse of `index_of` for a fixed arity n.
Assignment assignment_at(Modulus k, std::size_t n, std::uint64_t index);

/// k^n rows of m digits, row-major. The common storage behind TruthTable
/// (rows are input assignments) and Polynomial (rows are degree vectors).
class DigitGrid {
 public:
  /// Validates n >= 1, m >= 1, k^n within `kMaxGridRows`, cell count and
  /// that every cell is below k.
  DigitGrid(Modulus k, std::size_t n, std::size_t m, std::vector<Digit> cells);

  const Modulus& modulus() const noexcept { return k_; }
  Digit k() const noexcept { return k_.value(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t rows() const noexcept { return rows_; }

  Digit at(std::size_t row, std::size_t out) const { return cells_[row * m_ + out]; }
  std::span<const Digit> row(std::size_t r) const {
    return std::span<const Digit>(cells_).subspan(r * m_, m_);
  }
  std::span<const Digit> cells() const noexcept { return cells_; }

  /// Strided view over output column `out`.
  auto column(std::size_t out) const {
    return std::views::iota(std::size_t{0}, rows_) |
           std::views::transform([this, out](std::size_t r) { return at(r, out); });
  }
  std::vector<Digit> column_copy(std::size_t out) const;

  bool same_cells(const DigitGrid& other) const {
    return k_ == other.k_ && n_ == other.n_ && m_ == other.m_ && cells_ == other.cells_;
  }

 protected:
  Modulus k_;
  std::size_t n_;
  std::size_t m_;
  std::size_t rows_;
  std::vector<Digit> cells_;
};

namespace text {

/// Parsed `k <int> n <int> m <int>` header plus rows; shared by `.tt` and
/// `.anf`. Comments start at `#`; blank lines are ignored.
DigitGrid parse_grid(std::string_view text);

/// Header line, optional `# ...` comment lines, then one row per line.
std::string serialize_grid(const DigitGrid& grid, std::span<const std::string> comments = {});

}  // namespace text

}  // namespace zhegalkin

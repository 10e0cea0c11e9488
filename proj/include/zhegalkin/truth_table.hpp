#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zhegalkin/digit_grid.hpp"

namespace zhegalkin {

/// f : {0..k-1}^n -> {0..k-1}^m as k^n rows of m digits. Row r holds
/// f(assignment_at(k, n, r)), so x_1 is the most significant input digit.
class TruthTable : public DigitGrid {
 public:
  using DigitGrid::DigitGrid;
  explicit TruthTable(DigitGrid grid) : DigitGrid(std::move(grid)) {}

  /// f(x) as m digits.
  std::span<const Digit> operator()(const Assignment& x) const { return row(index_of(x)); }

  /// Builds a table by calling `f(row_index, output)` for every cell.
  template <class F>
  static TruthTable generate(Modulus k, std::size_t n, std::size_t m, F&& f) {
    auto rows = checked_power(k.value(), n, kMaxGridRows);
    std::vector<Digit> cells(rows * m);
    for (std::uint64_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < m; ++c) cells[r * m + c] = k.reduce(f(r, c));
    }
    return TruthTable(k, n, m, std::move(cells));
  }

  friend bool operator==(const TruthTable& a, const TruthTable& b) { return a.same_cells(b); }
};

TruthTable parse_truth_table(std::string_view text);
std::string serialize(const TruthTable& table);

/// Exact k^(k^n): the number of distinct n-argument k-valued functions.
/// Requires k prime and k^n <= 64.
boost::multiprecision::cpp_int count_functions(std::int64_t k, std::int64_t n);

}  // namespace zhegalkin

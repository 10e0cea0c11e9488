#include "zhegalkin/digit_grid.hpp"

#include <string>

#include "text_util.hpp"
#include "zhegalkin/errors.hpp"

namespace zhegalkin {

std::uint64_t checked_power(Digit k, std::size_t n, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v > limit / k) {
      throw SizeLimitError(std::to_string(k) + "^" + std::to_string(n) + " exceeds the limit of " +
                           std::to_string(limit));
    }
    v *= k;
  }
  if (v > limit) {
    throw SizeLimitError(std::to_string(k) + "^" + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(limit));
  }
  return v;
}

Assignment::Assignment(Modulus k, std::vector<Digit> digits) : k_(k), digits_(std::move(digits)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= k_.value()) {
      throw ContractError("digit " + std::to_string(digits_[i]) + " at position " +
                          std::to_string(i + 1) + " is out of range for k=" +
                          std::to_string(k_.value()));
    }
  }
}

std::uint64_t index_of(const Assignment& a) {
  std::uint64_t index = 0;
  for (Digit d : a.digits()) index = index * a.modulus().value() + d;
  return index;
}

Assignment assignment_at(Modulus k, std::size_t n, std::uint64_t index) {
  std::vector<Digit> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = static_cast<Digit>(index % k.value());
    index /= k.value();
  }
  if (index != 0) throw ContractError("index out of range for the given arity");
  return Assignment(k, std::move(digits));
}

DigitGrid::DigitGrid(Modulus k, std::size_t n, std::size_t m, std::vector<Digit> cells)
    : k_(k), n_(n), m_(m), rows_(0), cells_(std::move(cells)) {
  if (n_ == 0) throw ContractError("input arity n must be at least 1");
  if (m_ == 0) throw ContractError("output arity m must be at least 1");
  rows_ = checked_power(k_.value(), n_, kMaxGridRows);
  if (cells_.size() != rows_ * m_) {
    throw ContractError("expected " + std::to_string(rows_ * m_) + " cells, got " +
                        std::to_string(cells_.size()));
  }
  for (Digit d : cells_) {
    if (d >= k_.value()) {
      throw ContractError("digit " + std::to_string(d) + " out of range for k=" +
                          std::to_string(k_.value()));
    }
  }
}

std::vector<Digit> DigitGrid::column_copy(std::size_t out) const {
  std::vector<Digit> col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = at(r, out);
  return col;
}

namespace text {

DigitGrid parse_grid(std::string_view input) {
  using detail::Line;
  using Kind = ParseError::Kind;
  const auto lines = detail::significant_lines(input);
  if (lines.empty()) throw ParseError(Kind::kBadHeader, 1, "missing header");

  const auto header = detail::parse_header(lines.front());
  const Modulus k(header.k);
  const auto n = static_cast<std::size_t>(header.n);
  const auto m = static_cast<std::size_t>(header.m);
  const auto rows = checked_power(k.value(), n, kMaxGridRows);

  std::vector<Digit> cells;
  cells.reserve(rows * m);
  std::size_t seen = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (seen == rows) {
      throw ParseError(Kind::kRowCount, line.number,
                       "expected " + std::to_string(rows) + " rows, found more");
    }
    auto tokens = detail::split_ws(line.content);
    if (tokens.size() != m) {
      throw ParseError(Kind::kSyntax, line.number,
                       "expected " + std::to_string(m) + " digits, got " +
                           std::to_string(tokens.size()));
    }
    for (auto tok : tokens) {
      auto v = detail::parse_uint(tok);
      if (!v) {
        throw ParseError(Kind::kSyntax, line.number, "not a digit: '" + std::string(tok) + "'");
      }
      if (*v >= k.value()) {
        throw ParseError(Kind::kDigitRange, line.number,
                         "digit " + std::string(tok) + " out of range for k=" +
                             std::to_string(k.value()));
      }
      cells.push_back(static_cast<Digit>(*v));
    }
    ++seen;
  }
  if (seen != rows) {
    throw ParseError(Kind::kRowCount, 0,
                     "expected " + std::to_string(rows) + " rows, got " + std::to_string(seen));
  }
  return DigitGrid(k, n, m, std::move(cells));
}

std::string serialize_grid(const DigitGrid& grid, std::span<const std::string> comments) {
  std::string out = "k " + std::to_string(grid.k()) + " n " + std::to_string(grid.n()) + " m " +
                    std::to_string(grid.m()) + "\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    auto row = grid.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace text

}  // namespace zhegalkin

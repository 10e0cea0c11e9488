#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zhegalkin/digit_grid.hpp"
#include "zhegalkin/prime_field.hpp"
#include "zhegalkin/truth_table.hpp"

namespace zhegalkin {

/// Dense square matrix over GF(k), row-major.
class ModMatrix {
 public:
  ModMatrix(Modulus k, std::size_t dim, std::vector<Digit> entries);
  static ModMatrix identity(Modulus k, std::size_t dim);

  const Modulus& modulus() const noexcept { return k_; }
  std::size_t dim() const noexcept { return dim_; }
  Digit at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  std::span<const Digit> row(std::size_t r) const {
    return std::span<const Digit>(entries_).subspan(r * dim_, dim_);
  }
  std::vector<Digit> column(std::size_t c) const;
  std::span<const Digit> entries() const noexcept { return entries_; }

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  Modulus k_;
  std::size_t dim_;
  std::vector<Digit> entries_;
};

/// Gauss-Jordan inversion mod k. Throws ContractError if `a` is singular.
ModMatrix invert(const ModMatrix& a);

/// Upper bound on k for transform pairs (k*k matrix entries).
inline constexpr std::int64_t kMaxTransformModulus = 3163;

/// Q has column d equal to (v^d mod k) for v = 0..k-1, with 0^0 = 1.
/// P = Q^-1; column j of P is the coefficient column of the indicator e_j.
struct TransformPair {
  Modulus k;
  ModMatrix q;
  ModMatrix p;

  std::vector<Digit> p_column(std::size_t j) const { return p.column(j); }
};

/// Vandermonde matrix of powers (Q alone).
ModMatrix power_matrix(Modulus k);

/// Builds Q, inverts it exactly and checks QP = PQ = I before returning.
TransformPair build_transform_pair(Modulus k);

/// Zhegalkin coefficients: k^n rows (one per degree vector, d_1 most
/// significant) of m digits (one per output).
class Polynomial : public DigitGrid {
 public:
  using DigitGrid::DigitGrid;
  explicit Polynomial(DigitGrid grid) : DigitGrid(std::move(grid)) {}

  Digit coefficient(const Assignment& degrees, std::size_t out = 0) const {
    return at(index_of(degrees), out);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.same_cells(b); }
};

/// a = P^(x)n f per output, by the axis-wise transform.
Polynomial anf_transform(const TruthTable& table);

/// Same result, computed literally as the sum over truth-table rows of
/// f(x) * (p_{x_1} (x) ... (x) p_{x_n}). Quadratic in k^n; capped at
/// k^(2n) <= 10^8.
Polynomial anf_transform_kronecker(const TruthTable& table);

/// f = Q^(x)n a per output.
TruthTable inverse_transform(const Polynomial& poly);

/// Term-by-term evaluation at `point`, one digit per output. Uses no
/// transform machinery, so it serves as an independent oracle.
std::vector<Digit> evaluate(const Polynomial& poly, const Assignment& point);

/// Sum of monomials in lexicographic degree order, e.g.
/// "1 + x2 + x1 + x1*x2", "2*x1 + x1^2", or "0".
std::string render(const Polynomial& poly, std::size_t out = 0);

Polynomial parse_polynomial(std::string_view text);
std::string serialize(const Polynomial& poly, std::span<const std::string> comments = {});

}  // namespace zhegalkin

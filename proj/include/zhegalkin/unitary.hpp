#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zhegalkin/truth_table.hpp"

namespace zhegalkin {

/// Square integer matrix, row-major. Used for 0/1 permutation matrices.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t dim, std::vector<int> entries);
  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix zeros(std::size_t dim) { return DenseMatrix(dim, std::vector<int>(dim * dim)); }

  std::size_t dim() const noexcept { return dim_; }
  int at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  int& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  DenseMatrix transpose() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<int> entries_;
};

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

/// Block-diagonal matrix from equally sized square blocks.
DenseMatrix block_diagonal(std::span<const DenseMatrix> blocks);

/// T_j = sum_y |y + j mod k><y|, the cyclic shift of a single k-level digit.
class ShiftMatrix {
 public:
  ShiftMatrix(Modulus k, Digit shift) : k_(k), shift_(shift) {}

  const Modulus& modulus() const noexcept { return k_; }
  Digit shift() const noexcept { return shift_; }

  Digit apply(Digit y) const { return k_.add(y, shift_); }
  int entry(std::size_t row, std::size_t col) const {
    return row == k_.add(static_cast<Digit>(col), shift_) ? 1 : 0;
  }
  DenseMatrix dense() const;

  /// T_a T_b = T_{a+b}.
  friend ShiftMatrix operator*(const ShiftMatrix& a, const ShiftMatrix& b);
  friend bool operator==(const ShiftMatrix&, const ShiftMatrix&) = default;

 private:
  Modulus k_;
  Digit shift_;
};

/// Throws ContractError unless 0 <= j < k.
ShiftMatrix shift_matrix(Modulus k, std::int64_t j);

/// Upper bound on k^(n+m) for permutation storage, and on the dense export.
inline constexpr std::uint64_t kMaxUnitaryDimension = 10'000'000;
inline constexpr std::uint64_t kMaxDenseDimension = 4096;

/// U_f = blockdiag over x of (T_{f_1(x)} (x) ... (x) T_{f_m(x)}), stored as a
/// permutation of basis indices idx(|x, y>) = idx(x) * k^m + idx(y).
class BlockUnitary {
 public:
  const Modulus& modulus() const noexcept { return table_.modulus(); }
  std::size_t n() const noexcept { return table_.n(); }
  std::size_t m() const noexcept { return table_.m(); }
  std::uint64_t dimension() const noexcept { return image_.size(); }
  std::uint64_t block_size() const noexcept { return image_.size() / table_.rows(); }

  /// Shift amounts (j_1, ..., j_m) = f(x) of block `x_index`.
  std::span<const Digit> block(std::uint64_t x_index) const { return table_.row(x_index); }

  /// Dense T_{j_1} (x) ... (x) T_{j_m} for block `x_index`.
  DenseMatrix block_matrix(std::uint64_t x_index) const;

  std::uint64_t apply(std::uint64_t index) const;
  std::span<const std::uint64_t> permutation() const noexcept { return image_; }

 private:
  friend BlockUnitary build_unitary(const TruthTable& table);
  BlockUnitary(TruthTable table, std::vector<std::uint64_t> image)
      : table_(std::move(table)), image_(std::move(image)) {}

  TruthTable table_;
  std::vector<std::uint64_t> image_;
};

BlockUnitary build_unitary(const TruthTable& table);

/// Column s has its single 1 in row apply(s). Limited to kMaxDenseDimension.
DenseMatrix to_dense(const BlockUnitary& u);

/// Permutation of the product a * b, i.e. s -> a(b(s)).
std::vector<std::uint64_t> compose(const BlockUnitary& a, const BlockUnitary& b);

/// (f (+) g)(x) = f(x) + g(x) digit-wise mod k.
TruthTable pointwise_sum(const TruthTable& f, const TruthTable& g);

/// `i -> apply(i)` per line.
std::string format_permutation(const BlockUnitary& u);

/// Space-separated rows.
std::string format_dense(const DenseMatrix& m);

}  // namespace zhegalkin

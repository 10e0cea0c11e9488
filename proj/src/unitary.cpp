#include "zhegalkin/unitary.hpp"

#include "zhegalkin/errors.hpp"
#include "zhegalkin/kernels.hpp"

namespace zhegalkin {

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<int> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw ContractError("dense matrix size mismatch");
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  auto id = zeros(dim);
  for (std::size_t i = 0; i < dim; ++i) id.at(i, i) = 1;
  return id;
}

DenseMatrix DenseMatrix::transpose() const {
  auto t = zeros(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw ContractError("dense matrix dimension mismatch");
  auto out = DenseMatrix::zeros(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t t = 0; t < a.dim_; ++t) {
      const int v = a.at(i, t);
      if (v == 0) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) out.at(i, j) += v * b.at(t, j);
    }
  }
  return out;
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
  const auto n = a.dim() * b.dim();
  auto out = DenseMatrix::zeros(n);
  for (std::size_t ar = 0; ar < a.dim(); ++ar) {
    for (std::size_t ac = 0; ac < a.dim(); ++ac) {
      const int v = a.at(ar, ac);
      if (v == 0) continue;
      for (std::size_t br = 0; br < b.dim(); ++br) {
        for (std::size_t bc = 0; bc < b.dim(); ++bc) {
          out.at(ar * b.dim() + br, ac * b.dim() + bc) = v * b.at(br, bc);
        }
      }
    }
  }
  return out;
}

DenseMatrix block_diagonal(std::span<const DenseMatrix> blocks) {
  if (blocks.empty()) throw ContractError("block_diagonal needs at least one block");
  const auto b = blocks.front().dim();
  auto out = DenseMatrix::zeros(b * blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].dim() != b) throw ContractError("blocks must share one dimension");
    for (std::size_t r = 0; r < b; ++r) {
      for (std::size_t c = 0; c < b; ++c) out.at(i * b + r, i * b + c) = blocks[i].at(r, c);
    }
  }
  return out;
}

DenseMatrix ShiftMatrix::dense() const {
  const std::size_t k = k_.value();
  auto out = DenseMatrix::zeros(k);
  for (std::size_t c = 0; c < k; ++c) out.at(apply(static_cast<Digit>(c)), c) = 1;
  return out;
}

ShiftMatrix operator*(const ShiftMatrix& a, const ShiftMatrix& b) {
  if (a.k_ != b.k_) throw ContractError("modulus mismatch");
  return ShiftMatrix(a.k_, a.k_.add(a.shift_, b.shift_));
}

ShiftMatrix shift_matrix(Modulus k, std::int64_t j) {
  if (j < 0 || j >= static_cast<std::int64_t>(k.value())) {
    throw ContractError("shift " + std::to_string(j) + " outside [0, " +
                        std::to_string(k.value() - 1) + "]");
  }
  return ShiftMatrix(k, static_cast<Digit>(j));
}

DenseMatrix BlockUnitary::block_matrix(std::uint64_t x_index) const {
  const auto shifts = block(x_index);
  auto out = ShiftMatrix(modulus(), shifts[0]).dense();
  for (std::size_t c = 1; c < shifts.size(); ++c) {
    out = kronecker(out, ShiftMatrix(modulus(), shifts[c]).dense());
  }
  return out;
}

std::uint64_t BlockUnitary::apply(std::uint64_t index) const {
  if (index >= image_.size()) {
    throw ContractError("basis index " + std::to_string(index) + " out of range [0, " +
                        std::to_string(image_.size()) + ")");
  }
  return image_[index];
}

BlockUnitary build_unitary(const TruthTable& table) {
  const auto dim = checked_power(table.k(), table.n() + table.m(), kMaxUnitaryDimension);
  std::vector<std::uint64_t> image(dim);
  kernels::omp::block_permutation(table.cells(), table.modulus(), table.m(), image);
  return BlockUnitary(table, std::move(image));
}

DenseMatrix to_dense(const BlockUnitary& u) {
  if (u.dimension() > kMaxDenseDimension) {
    throw SizeLimitError("dense export of dimension " + std::to_string(u.dimension()) +
                         " exceeds the limit of " + std::to_string(kMaxDenseDimension));
  }
  auto out = DenseMatrix::zeros(u.dimension());
  for (std::uint64_t s = 0; s < u.dimension(); ++s) out.at(u.apply(s), s) = 1;
  return out;
}

std::vector<std::uint64_t> compose(const BlockUnitary& a, const BlockUnitary& b) {
  if (a.dimension() != b.dimension() || a.modulus() != b.modulus()) {
    throw ContractError("cannot compose unitaries of different shape");
  }
  std::vector<std::uint64_t> out(a.dimension());
  for (std::uint64_t s = 0; s < out.size(); ++s) out[s] = a.apply(b.apply(s));
  return out;
}

TruthTable pointwise_sum(const TruthTable& f, const TruthTable& g) {
  if (f.modulus() != g.modulus() || f.n() != g.n() || f.m() != g.m()) {
    throw ContractError("pointwise sum needs tables of identical shape");
  }
  std::vector<Digit> cells(f.cells().size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i] = f.modulus().add(f.cells()[i], g.cells()[i]);
  }
  return TruthTable(f.modulus(), f.n(), f.m(), std::move(cells));
}

std::string format_permutation(const BlockUnitary& u) {
  std::string out;
  for (std::uint64_t s = 0; s < u.dimension(); ++s) {
    out += std::to_string(s) + " -> " + std::to_string(u.apply(s)) + "\n";
  }
  return out;
}

std::string format_dense(const DenseMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c != 0) out += ' ';
      out += std::to_string(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace zhegalkin

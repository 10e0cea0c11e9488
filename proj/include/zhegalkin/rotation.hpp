#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "zhegalkin/prime_field.hpp"

namespace zhegalkin {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zeros(std::size_t dim) {
    return ComplexMatrix(dim, std::vector<Complex>(dim * dim));
  }

  std::size_t dim() const noexcept { return dim_; }
  const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Complex& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// max |M(i,j) - conj(M(j,i))|
  double hermiticity_error() const;
  /// max |M M^dagger - I|
  double unitarity_error() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Entrywise max |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Amplitudes of a single k-level digit.
class QuditState {
 public:
  explicit QuditState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}
  static QuditState basis(std::size_t k, std::size_t j);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  /// sum |amplitude|^2
  double norm_squared() const;

 private:
  std::vector<Complex> amplitudes_;
};

double max_abs_diff(const QuditState& a, const QuditState& b);

/// min over global phases phi of max |a - e^{i phi} b|, approximated by
/// aligning on the largest component of b.
double max_abs_diff_up_to_phase(const QuditState& a, const QuditState& b);

/// Spin value s_j of Fourier mode j: the representative of -j mod k in
/// [-(k-1)/2, (k-1)/2]. For k = 3 this is (0, -1, 1).
int mode_spin(Modulus k, std::size_t j);

/// Hermitian S with exp(-i S 2pi/k) = T_1, built as sum_j s_j |phi_j><phi_j|
/// where phi_j[x] = omega^(-j x) / sqrt(k) are the eigenvectors of the
/// cyclic shift. Requires an odd prime k.
ComplexMatrix generator(Modulus k);

/// exp(-i S theta) evaluated on the same eigenbasis, so it is exact up to
/// rounding and unitary for every finite theta.
ComplexMatrix rotate(Modulus k, double theta);

/// rotate(k, theta) * state. The input must be normalized within 1e-6.
QuditState apply_rotation(Modulus k, double theta, const QuditState& state);

}  // namespace zhegalkin

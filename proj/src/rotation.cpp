#include "zhegalkin/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zhegalkin/errors.hpp"

namespace zhegalkin {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw ContractError("complex matrix size mismatch");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  auto id = zeros(dim);
  for (std::size_t i = 0; i < dim; ++i) id.at(i, i) = 1.0;
  return id;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  auto out = zeros(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::hermiticity_error() const { return max_abs_diff(*this, adjoint()); }

double ComplexMatrix::unitarity_error() const {
  return max_abs_diff(*this * adjoint(), identity(dim_));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw ContractError("complex matrix dimension mismatch");
  auto out = ComplexMatrix::zeros(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t t = 0; t < a.dim_; ++t) {
      const Complex v = a.at(i, t);
      for (std::size_t j = 0; j < a.dim_; ++j) out.at(i, j) += v * b.at(t, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ContractError("complex matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

QuditState QuditState::basis(std::size_t k, std::size_t j) {
  if (j >= k) throw ContractError("basis digit " + std::to_string(j) + " out of range");
  std::vector<Complex> amps(k);
  amps[j] = 1.0;
  return QuditState(std::move(amps));
}

double QuditState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

double max_abs_diff(const QuditState& a, const QuditState& b) {
  if (a.dim() != b.dim()) throw ContractError("state dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs_diff_up_to_phase(const QuditState& a, const QuditState& b) {
  if (a.dim() != b.dim()) throw ContractError("state dimension mismatch");
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < b.dim(); ++i) {
    if (std::abs(b[i]) > std::abs(b[pivot])) pivot = i;
  }
  Complex phase = 1.0;
  if (std::abs(a[pivot]) > 0.0 && std::abs(b[pivot]) > 0.0) {
    const Complex ratio = a[pivot] / b[pivot];
    phase = ratio / std::abs(ratio);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  }
  return worst;
}

int mode_spin(Modulus k, std::size_t j) {
  const int kk = static_cast<int>(k.value());
  int s = static_cast<int>(k.neg(static_cast<Digit>(j % k.value())));
  if (s > (kk - 1) / 2) s -= kk;
  return s;
}

namespace {

void require_odd_prime(const Modulus& k) {
  if (k.value() == 2) {
    throw ContractError("the rotation generator needs an odd prime k; k=2 has no symmetric spectrum");
  }
  if (k.value() > 512) throw SizeLimitError("rotation matrices are limited to k <= 512");
}

// sum_j w_j |phi_j><phi_j| with phi_j[x] = omega^(-j x) / sqrt(k), so entry
// (r, c) is (1/k) sum_j w_j omega^(-j (r - c)).
template <class Weight>
ComplexMatrix spectral_sum(Modulus k, Weight weight) {
  const std::size_t n = k.value();
  std::vector<Complex> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = weight(j);

  // Circulant: the entry only depends on (r - c) mod k.
  std::vector<Complex> diagonal(n);
  for (std::size_t delta = 0; delta < n; ++delta) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * delta) % n) /
                           static_cast<double>(n);
      acc += w[j] * std::polar(1.0, angle);
    }
    diagonal[delta] = acc / static_cast<double>(n);
  }
  auto out = ComplexMatrix::zeros(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = diagonal[(r + n - c) % n];
  }
  return out;
}

}  // namespace

ComplexMatrix generator(Modulus k) {
  require_odd_prime(k);
  return spectral_sum(k, [&](std::size_t j) { return Complex(mode_spin(k, j), 0.0); });
}

ComplexMatrix rotate(Modulus k, double theta) {
  require_odd_prime(k);
  if (!std::isfinite(theta)) throw ContractError("rotation angle must be finite");
  return spectral_sum(k, [&](std::size_t j) { return std::polar(1.0, -mode_spin(k, j) * theta); });
}

QuditState apply_rotation(Modulus k, double theta, const QuditState& state) {
  if (state.dim() != k.value()) {
    throw ContractError("state has " + std::to_string(state.dim()) + " amplitudes, expected " +
                        std::to_string(k.value()));
  }
  if (std::abs(state.norm_squared() - 1.0) > 1e-6) {
    throw ContractError("input state is not normalized");
  }
  const auto u = rotate(k, theta);
  std::vector<Complex> out(k.value());
  for (std::size_t r = 0; r < out.size(); ++r) {
    for (std::size_t c = 0; c < out.size(); ++c) out[r] += u.at(r, c) * state[c];
  }
  return QuditState(std::move(out));
}

}  // namespace zhegalkin

#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// plain reference kept for testing, `omp` is the OpenMP version used by the
// public API. Both must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>

#include "zhegalkin/prime_field.hpp"

namespace zhegalkin::kernels {

/// A reversible gate packed for a register of at most 64 wires. Bit b of a
/// basis index is wire (width - b), so wire 1 is the most significant bit.
struct PackedGate {
  std::uint64_t control_mask;
  std::uint64_t target_bit;
};

inline std::uint64_t apply_gates(std::span<const PackedGate> gates, std::uint64_t state) {
  for (const auto& g : gates) {
    if ((state & g.control_mask) == g.control_mask) state ^= g.target_bit;
  }
  return state;
}

namespace serial {

/// Applies the k x k row-major `matrix` along each of the n tensor axes of
/// `cells` (k^n rows of m digits), in place: column c becomes
/// (M (x) ... (x) M) * column c.
void axis_transform(std::span<Digit> cells, Modulus k, std::size_t n, std::size_t m,
                    std::span<const Digit> matrix);

/// image[idx(x) * k^m + idx(y)] = idx(x) * k^m + idx(y (+) f(x)), with (+)
/// digit-wise addition mod k and f read from `cells` (k^n rows of m digits).
void block_permutation(std::span<const Digit> cells, Modulus k, std::size_t m,
                       std::span<std::uint64_t> image);

/// image[s] = gates applied to basis index s, for every s < image.size().
void circuit_permutation(std::span<const PackedGate> gates, std::span<std::uint64_t> image);

/// outputs[x] = low m bits after running the gates on basis index (x << m).
void circuit_outputs(std::span<const PackedGate> gates, unsigned m,
                     std::span<std::uint64_t> outputs);

}  // namespace serial

namespace omp {

void axis_transform(std::span<Digit> cells, Modulus k, std::size_t n, std::size_t m,
                    std::span<const Digit> matrix);
void block_permutation(std::span<const Digit> cells, Modulus k, std::size_t m,
                       std::span<std::uint64_t> image);
void circuit_permutation(std::span<const PackedGate> gates, std::span<std::uint64_t> image);
void circuit_outputs(std::span<const PackedGate> gates, unsigned m,
                     std::span<std::uint64_t> outputs);

}  // namespace omp

}  // namespace zhegalkin::kernels

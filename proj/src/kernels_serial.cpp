#include <vector>

#include "zhegalkin/kernels.hpp"

namespace zhegalkin::kernels::serial {

void axis_transform(std::span<Digit> cells, Modulus k, std::size_t n, std::size_t m,
                    std::span<const Digit> matrix) {
  const std::size_t kk = k.value();
  const std::size_t rows = cells.size() / m;
  std::vector<Digit> gathered(kk);
  std::size_t stride = rows;
  for (std::size_t axis = 0; axis < n; ++axis) {
    stride /= kk;
    const std::size_t block = stride * kk;
    for (std::size_t base = 0; base < rows; base += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t t = 0; t < kk; ++t) {
            gathered[t] = cells[(base + t * stride + inner) * m + c];
          }
          for (std::size_t r = 0; r < kk; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < kk; ++t) {
              acc += static_cast<std::uint64_t>(matrix[r * kk + t]) * gathered[t];
            }
            cells[(base + r * stride + inner) * m + c] = static_cast<Digit>(acc % kk);
          }
        }
      }
    }
  }
}

void block_permutation(std::span<const Digit> cells, Modulus k, std::size_t m,
                       std::span<std::uint64_t> image) {
  const std::uint64_t kk = k.value();
  const std::size_t rows = cells.size() / m;
  const std::uint64_t outputs = image.size() / rows;
  for (std::size_t x = 0; x < rows; ++x) {
    const auto* fx = cells.data() + x * m;
    for (std::uint64_t y = 0; y < outputs; ++y) {
      std::uint64_t rest = y;
      std::uint64_t shifted = 0;
      std::uint64_t place = 1;
      for (std::size_t c = m; c-- > 0;) {
        const auto digit = rest % kk;
        rest /= kk;
        shifted += ((digit + fx[c]) % kk) * place;
        place *= kk;
      }
      image[x * outputs + y] = x * outputs + shifted;
    }
  }
}

void circuit_permutation(std::span<const PackedGate> gates, std::span<std::uint64_t> image) {
  for (std::uint64_t s = 0; s < image.size(); ++s) image[s] = apply_gates(gates, s);
}

void circuit_outputs(std::span<const PackedGate> gates, unsigned m,
                     std::span<std::uint64_t> outputs) {
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t x = 0; x < outputs.size(); ++x) {
    outputs[x] = apply_gates(gates, x << m) & mask;
  }
}

}  // namespace zhegalkin::kernels::serial

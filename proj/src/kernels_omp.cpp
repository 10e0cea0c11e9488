#include <omp.h>

#include <cstdint>
#include <vector>

#include "zhegalkin/kernels.hpp"

namespace zhegalkin::kernels::omp {

namespace {

// Below this many cells the fork/join overhead dominates.
constexpr std::int64_t kParallelThreshold = 1 << 12;

}  // namespace

void axis_transform(std::span<Digit> cells, Modulus k, std::size_t n, std::size_t m,
                    std::span<const Digit> matrix) {
  const std::size_t kk = k.value();
  const std::size_t rows = cells.size() / m;
  const auto groups = static_cast<std::int64_t>(rows / kk * m);
  Digit* data = cells.data();
  const Digit* mat = matrix.data();

  std::size_t stride = rows;
  for (std::size_t axis = 0; axis < n; ++axis) {
    stride /= kk;
    const std::size_t block = stride * kk;

#pragma omp parallel if (static_cast<std::int64_t>(cells.size()) >= kParallelThreshold)
    {
      std::vector<Digit> gathered(kk);
#pragma omp for schedule(static)
      for (std::int64_t g = 0; g < groups; ++g) {
        const auto c = static_cast<std::size_t>(g) % m;
        const auto q = static_cast<std::size_t>(g) / m;
        const std::size_t base = (q / stride) * block + q % stride;
        for (std::size_t t = 0; t < kk; ++t) gathered[t] = data[(base + t * stride) * m + c];
        for (std::size_t r = 0; r < kk; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t t = 0; t < kk; ++t) {
            acc += static_cast<std::uint64_t>(mat[r * kk + t]) * gathered[t];
          }
          data[(base + r * stride) * m + c] = static_cast<Digit>(acc % kk);
        }
      }
    }
  }
}

void block_permutation(std::span<const Digit> cells, Modulus k, std::size_t m,
                       std::span<std::uint64_t> image) {
  const std::uint64_t kk = k.value();
  const std::uint64_t rows = cells.size() / m;
  const std::uint64_t outputs = image.size() / rows;
  const auto total = static_cast<std::int64_t>(image.size());
  const Digit* f = cells.data();
  std::uint64_t* out = image.data();

#pragma omp parallel for schedule(static) if (total >= kParallelThreshold)
  for (std::int64_t s = 0; s < total; ++s) {
    const auto x = static_cast<std::uint64_t>(s) / outputs;
    std::uint64_t rest = static_cast<std::uint64_t>(s) % outputs;
    const Digit* fx = f + x * m;
    std::uint64_t shifted = 0;
    std::uint64_t place = 1;
    for (std::size_t c = m; c-- > 0;) {
      const auto digit = rest % kk;
      rest /= kk;
      shifted += ((digit + fx[c]) % kk) * place;
      place *= kk;
    }
    out[s] = x * outputs + shifted;
  }
}

void circuit_permutation(std::span<const PackedGate> gates, std::span<std::uint64_t> image) {
  const auto total = static_cast<std::int64_t>(image.size());
  std::uint64_t* out = image.data();
#pragma omp parallel for schedule(static) if (total >= kParallelThreshold)
  for (std::int64_t s = 0; s < total; ++s) {
    out[s] = apply_gates(gates, static_cast<std::uint64_t>(s));
  }
}

void circuit_outputs(std::span<const PackedGate> gates, unsigned m,
                     std::span<std::uint64_t> outputs) {
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  const auto total = static_cast<std::int64_t>(outputs.size());
  std::uint64_t* out = outputs.data();
#pragma omp parallel for schedule(static) if (total >= kParallelThreshold)
  for (std::int64_t x = 0; x < total; ++x) {
    out[x] = apply_gates(gates, static_cast<std::uint64_t>(x) << m) & mask;
  }
}

}  // namespace zhegalkin::kernels::omp

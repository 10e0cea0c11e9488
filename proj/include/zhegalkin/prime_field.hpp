#pragma once

#include <compare>
#include <cstdint>

namespace zhegalkin {

/// Raw residue storage. Every value handled by the kernels is in [0, k).
using Digit = std::uint32_t;

/// Largest modulus accepted by `Modulus`. Trial division is exact far past
/// this, the guard only keeps products inside 64 bits with room to spare.
inline constexpr std::int64_t kMaxModulus = 1'000'000;

/// Deterministic trial division. Exact for every non-negative input.
bool is_prime(std::int64_t k);

/// A prime modulus k. Construction rejects composites and values above
/// `kMaxModulus`.
class Modulus {
 public:
  explicit Modulus(std::int64_t k);

  Digit value() const noexcept { return k_; }

  Digit reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(k_);
    return static_cast<Digit>(r < 0 ? r + k_ : r);
  }
  Digit add(Digit a, Digit b) const noexcept {
    Digit s = a + b;
    return s >= k_ ? s - k_ : s;
  }
  Digit sub(Digit a, Digit b) const noexcept { return a >= b ? a - b : a + k_ - b; }
  Digit neg(Digit a) const noexcept { return a == 0 ? 0 : k_ - a; }
  Digit mul(Digit a, Digit b) const noexcept {
    return static_cast<Digit>(static_cast<std::uint64_t>(a) * b % k_);
  }
  Digit pow(Digit base, std::uint64_t exp) const noexcept;

  /// a^(k-2). Throws ContractError for a == 0.
  Digit inverse(Digit a) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Digit k_;
};

/// An element of GF(k) carrying its modulus. Mixing moduli throws.
class FieldElement {
 public:
  FieldElement(Modulus modulus, std::int64_t value)
      : modulus_(modulus), value_(modulus.reduce(value)) {}

  Digit value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return modulus_; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exp) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  Modulus modulus_;
  Digit value_;
};

}  // namespace zhegalkin

#include "zhegalkin/prime_field.hpp"

#include <string>

#include "zhegalkin/errors.hpp"

namespace zhegalkin {

bool is_prime(std::int64_t k) {
  if (k < 2) return false;
  if (k < 4) return true;
  if (k % 2 == 0) return false;
  for (std::int64_t d = 3; d <= k / d; d += 2) {
    if (k % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::int64_t k) {
  if (k > kMaxModulus) {
    throw SizeLimitError("modulus " + std::to_string(k) + " exceeds the limit of " +
                         std::to_string(kMaxModulus));
  }
  if (!is_prime(k)) {
    throw ContractError("modulus " + std::to_string(k) + " is not prime");
  }
  k_ = static_cast<Digit>(k);
}

Digit Modulus::pow(Digit base, std::uint64_t exp) const noexcept {
  Digit result = 1 % k_;
  base %= k_;
  while (exp != 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

Digit Modulus::inverse(Digit a) const {
  if (a % k_ == 0) throw ContractError("zero has no inverse");
  return pow(a, k_ - 2);
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ContractError("modulus mismatch: " + std::to_string(a.modulus().value()) + " vs " +
                        std::to_string(b.modulus().value()));
  }
}

}  // namespace

FieldElement FieldElement::inverse() const {
  return FieldElement(modulus_, modulus_.inverse(value_));
}

FieldElement FieldElement::pow(std::uint64_t exp) const {
  return FieldElement(modulus_, modulus_.pow(value_, exp));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.modulus_, a.modulus_.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.modulus_, a.modulus_.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.modulus_, a.modulus_.mul(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.modulus_, a.modulus_.neg(a.value_));
}

}  // namespace zhegalkin

#include "privcoal/field.hpp"

#include <array>
#include <ostream>
#include <string>

namespace privcoal {

namespace detail {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return result;
}

}  // namespace detail

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  // This witness set is exact for all n < 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw ParameterError("modulus " + std::to_string(p) + " is not prime");
  }
}

void FieldElement::require_same_modulus(const FieldElement& other) const {
  if (modulus_ != other.modulus_) {
    throw ParameterError("field elements over different moduli (" +
                         std::to_string(modulus_.value()) + " vs " +
                         std::to_string(other.modulus_.value()) + ")");
  }
}

FieldElement FieldElement::operator-() const {
  return {value_ == 0 ? 0 : modulus_.value() - value_, modulus_};
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_modulus(rhs);
  value_ = detail::add_mod(value_, rhs.value_, modulus_.value());
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_modulus(rhs);
  value_ = detail::sub_mod(value_, rhs.value_, modulus_.value());
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_modulus(rhs);
  value_ = detail::mul_mod(value_, rhs.value_, modulus_.value());
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) {
    throw DivisionByZero("zero has no inverse mod " + std::to_string(modulus_.value()));
  }
  // Fermat: a^(p-2) = a^-1.
  return {detail::pow_mod(value_, modulus_.value() - 2, modulus_.value()), modulus_};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return {detail::pow_mod(value_, exponent, modulus_.value()), modulus_};
}

FieldElement normalize(std::int64_t n, PrimeModulus modulus) {
  const std::uint64_t p = modulus.value();
  if (n >= 0) return {static_cast<std::uint64_t>(n) % p, modulus};
  // |n| computed without overflowing at INT64_MIN.
  const std::uint64_t magnitude = static_cast<std::uint64_t>(-(n + 1)) + 1;
  const std::uint64_t r = magnitude % p;
  return {r == 0 ? 0 : p - r, modulus};
}

FieldElement arith(ArithOp op, const FieldElement& a, const FieldElement& b) {
  switch (op) {
    case ArithOp::kAdd:
      return a + b;
    case ArithOp::kSub:
      return a - b;
    case ArithOp::kMul:
      return a * b;
  }
  throw ParameterError("unknown arithmetic operation");
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  return os << x.value();
}

}  // namespace privcoal

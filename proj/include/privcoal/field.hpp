#pragma once

#include <cstdint>
#include <iosfwd>

#include "privcoal/errors.hpp"

namespace privcoal {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Order of a prime field. Primality is checked on construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace detail

// A fully reduced residue 0 <= value < p.
class FieldElement {
 public:
  FieldElement(std::uint64_t value, PrimeModulus modulus)
      : value_(value % modulus.value()), modulus_(modulus) {}

  static FieldElement zero(PrimeModulus modulus) { return {0, modulus}; }
  static FieldElement one(PrimeModulus modulus) { return {1, modulus}; }

  std::uint64_t value() const { return value_; }
  PrimeModulus modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  // Throws DivisionByZero for the zero element.
  FieldElement inverse() const;
  // 0^0 == 1.
  FieldElement pow(std::uint64_t exponent) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  void require_same_modulus(const FieldElement& other) const;

  std::uint64_t value_;
  PrimeModulus modulus_;
};

// n mod p in [0, p) for any signed n.
FieldElement normalize(std::int64_t n, PrimeModulus modulus);

enum class ArithOp { kAdd, kSub, kMul };

FieldElement arith(ArithOp op, const FieldElement& a, const FieldElement& b);

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace privcoal

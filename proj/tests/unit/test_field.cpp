#include <climits>

#include "doctest.h"
#include "oracles.hpp"
#include "privcoal/field.hpp"

using namespace privcoal;

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(is_prime(725597));
  CHECK(is_prime(2305843009213693951ULL));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_THROWS_AS(PrimeModulus(12), ParameterError);
}

TEST_CASE("normalize") {
  const PrimeModulus p7(7), p13(13);
  CHECK(normalize(15, p7).value() == 1);
  CHECK(normalize(0, p13).value() == 0);
  CHECK(normalize(-1, p13).value() == 12);
  CHECK(normalize(INT64_MIN, p13).value() == oracle::u64((__int128(INT64_MIN) % 13 + 13) % 13));
}

TEST_CASE("arith") {
  const PrimeModulus p7(7), p13(13);
  CHECK(arith(ArithOp::kMul, {3, p7}, {5, p7}).value() == 1);
  CHECK(arith(ArithOp::kAdd, {6, p7}, {1, p7}).value() == 0);
  CHECK(arith(ArithOp::kSub, {0, p13}, {1, p13}).value() == 12);
  CHECK_THROWS_AS(FieldElement(1, p7) + FieldElement(1, p13), ParameterError);
}

TEST_CASE("inverse") {
  const PrimeModulus p7(7), p13(13);
  CHECK(FieldElement(3, p7).inverse().value() == 5);
  CHECK(FieldElement(1, p13).inverse().value() == 1);
  CHECK(FieldElement(5, p13).inverse().value() == oracle::inverse_scan(5, 13));
  CHECK(FieldElement(5, p13).inverse().value() == 8);
  CHECK_THROWS_AS(FieldElement(0, p13).inverse(), DivisionByZero);
  CHECK_THROWS_AS(FieldElement(3, p7) / FieldElement(0, p7), DivisionByZero);
  for (std::uint64_t p : {2ULL, 3ULL, 31ULL, 101ULL}) {
    const PrimeModulus m(p);
    for (std::uint64_t a = 1; a < p; ++a) CHECK(FieldElement(a, m).inverse().value() == oracle::inverse_scan(a, p));
  }
}

TEST_CASE("pow") {
  const PrimeModulus p7(7), p13(13);
  CHECK(FieldElement(3, p7).pow(0).value() == 1);
  CHECK(FieldElement(0, p7).pow(0).value() == 1);
  CHECK(FieldElement(2, p7).pow(3).value() == 1);
  CHECK(FieldElement(5, p13).pow(11).value() == 8);
  CHECK(FieldElement(5, p13).pow(11).value() == oracle::inverse_scan(5, 13));
  for (std::uint64_t e = 0; e < 40; ++e) CHECK(FieldElement(6, p13).pow(e).value() == oracle::powmod(6, e, 13));
}

TEST_CASE("large modulus stays exact") {
  const std::uint64_t q = 2305843009213693951ULL;
  const PrimeModulus m(q);
  const FieldElement a(q - 1, m);
  CHECK((a * a).value() == 1);
  CHECK((a + a).value() == q - 2);
  CHECK((a * a.inverse()).value() == 1);
}

#include "doctest.h"
#include "oracles.hpp"
#include "privcoal/linalg.hpp"
#include "privcoal/symfun.hpp"

using namespace privcoal;

namespace {
std::vector<std::uint64_t> raw(const std::vector<FieldElement>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.value());
  return out;
}
}  // namespace

TEST_CASE("track invariants") {
  const PrimeModulus p7(7);
  Track tr({4, 1, 2}, p7);
  CHECK(tr.values() == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(tr.to_string() == "(1,2,4)");
  CHECK_THROWS_AS(Track({}, p7), ParameterError);
  CHECK_THROWS_AS(Track({0, 1}, p7), ParameterError);
  CHECK_THROWS_AS(Track({1, 7}, p7), ParameterError);
  CHECK_THROWS_AS(Track({2, 2}, p7), ParameterError);
  CHECK(Track({1, 7}, p7, LabelRange::kUpToFieldOrder)[1].value() == 0);
  CHECK_THROWS_AS(Track({8}, p7, LabelRange::kUpToFieldOrder), ParameterError);
  CHECK(tr.without(1).values() == std::vector<std::uint64_t>{1, 4});
  CHECK(tr.subtrack(0b101).values() == std::vector<std::uint64_t>{1, 4});
  CHECK(Track({1, 2}, p7).is_subset_of(tr));
  CHECK(Track({3, 5}, p7).disjoint_with(tr));
  CHECK(Track({1, 2}, p7) < Track({1, 3}, p7));
}

TEST_CASE("elementary symmetric values") {
  const PrimeModulus p7(7), p13(13), p17(17);
  CHECK(elem_sym(Track({1, 2, 4}, p7), 2).value() == 0);
  CHECK(elem_sym(Track({1, 2, 4}, p7), 0).value() == 1);
  CHECK(elem_sym(Track({1, 5, 8, 12}, p13), 3).value() == 0);
  CHECK(elem_sym(Track({1, 2, 4}, p7), 5).value() == 0);
  CHECK(raw(elem_sym_all(Track({1, 2, 4}, p7))) == std::vector<std::uint64_t>{1, 0, 0, 1});
  CHECK(raw(elem_sym_all(Track({9}, p13))) == std::vector<std::uint64_t>{1, 9});
  const auto t17 = raw(elem_sym_all(Track({6, 7, 10, 11}, p17)));
  CHECK(t17[1] == 0);
  CHECK(t17[2] == 0);
  CHECK(t17[3] == 0);
}

TEST_CASE("elementary symmetric agrees with subset sums") {
  for (std::uint64_t p : {7ULL, 13ULL, 31ULL}) {
    const PrimeModulus m(p);
    oracle::subsets(4, static_cast<unsigned>(std::min<std::uint64_t>(p - 1, 9)), [&](const oracle::Vec& l) {
      const auto all = raw(elem_sym_all(Track(l, m)));
      for (unsigned w = 0; w <= 4; ++w) CHECK(all[w] == oracle::tau_subset_sum(l, w, p));
    });
  }
}

TEST_CASE("polynomial evaluation") {
  const PrimeModulus p7(7);
  const std::vector<std::uint64_t> a{1, 2, 3, 4, 5};
  const CoeffVector c(a, p7);
  CHECK(poly_eval(c, {1, p7}).value() == 1);
  CHECK(poly_eval(c, {4, p7}).value() == 4);
  CHECK(poly_eval(c, {4, p7}).value() == oracle::eval_terms(a, 4, 7));
  const std::vector<std::uint64_t> k{5, 0, 0, 0};
  for (std::uint64_t x = 0; x < 7; ++x) CHECK(poly_eval(CoeffVector(k, p7), {x, p7}).value() == 5);
}

TEST_CASE("vandermonde determinants") {
  const PrimeModulus p7(7), p31(31);
  CHECK(vandermonde_det(Track({1, 2, 3}, p7)).value() == 2);
  CHECK(vandermonde_det(Track({5}, p7)).value() == 1);
  const oracle::Vec l{1, 3, 5, 8, 9};
  const auto expect = oracle::det_cofactor(oracle::power_rows(l, {0, 1, 2, 3, 4}, 31), 31);
  CHECK(vandermonde_det(Track(l, p31)).value() == expect);

  const std::vector<std::uint64_t> e3{0, 1, 2};
  CHECK(generalized_vandermonde_det(Track({2, 4, 6}, p7), e3) == vandermonde_det(Track({2, 4, 6}, p7)));
  const std::vector<std::uint64_t> c1{3};
  CHECK(generalized_vandermonde_det(Track({3}, p7), c1).value() == 6);
  const std::vector<std::uint64_t> c02{0, 2};
  CHECK(generalized_vandermonde_det(Track({2, 3}, p7), c02).value() == 5);
  const std::vector<std::uint64_t> gap{0, 2, 3, 6};
  const oracle::Vec pts{2, 7, 11, 20};
  CHECK(generalized_vandermonde_det(Track(pts, p31), gap).value() ==
        oracle::det_cofactor(oracle::power_rows(pts, {0, 2, 3, 6}, 31), 31));
  const std::vector<std::uint64_t> bad{2, 1};
  CHECK_THROWS_AS(generalized_vandermonde_det(Track({2, 3}, p7), bad), ParameterError);
  CHECK_THROWS_AS(generalized_vandermonde_det(Track({2, 3}, p7), c1), ParameterError);
}

TEST_CASE("matrix routines") {
  const PrimeModulus p13(13);
  const std::vector<FieldElement> pts{{1, p13}, {2, p13}, {3, p13}};
  const Matrix m = Matrix::power_matrix(pts, 3);
  CHECK(m.rank() == 3);
  CHECK(m.determinant().value() == 2);
  const std::vector<FieldElement> rhs{{6, p13}, {17, p13}, {34, p13}};  // 1 + 2x + 3x^2
  const auto sol = m.solve(rhs);
  REQUIRE(sol);
  CHECK(raw(*sol) == std::vector<std::uint64_t>{1, 2, 3});
  const Matrix wide = Matrix::power_matrix(pts, 5);
  CHECK(wide.rank() == 3);
  Matrix sing(2, 2, p13);
  sing.set(0, 0, {1, p13});
  sing.set(0, 1, {2, p13});
  sing.set(1, 0, {2, p13});
  sing.set(1, 1, {4, p13});
  CHECK(sing.determinant().is_zero());
  CHECK_FALSE(sing.solve(std::vector<FieldElement>{{1, p13}, {1, p13}}));
  CHECK(sing.row_space_contains(std::vector<FieldElement>{{3, p13}, {6, p13}}));
  CHECK_FALSE(sing.row_space_contains(std::vector<FieldElement>{{1, p13}, {0, p13}}));
}

#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "privcoal/audit.hpp"

using namespace privcoal;

namespace {
const PrimeModulus p7(7);
SchemeConfig cfg5() { return SchemeConfig(5, Track({1, 2, 3, 4, 5, 6}, p7)); }
ShareTable dealt() {
  const std::vector<std::uint64_t> s{1, 2, 3, 4};
  return deal(cfg5(), make_secret_vector(s, 5, p7));
}
}  // namespace

TEST_CASE("capacity guard") {
  CHECK_NOTHROW(require_audit_capacity(5, p7));
  CHECK_THROWS_AS(require_audit_capacity(7, PrimeModulus(101)), CapacityError);
  const SchemeConfig big(7, Track({1, 2, 3, 4, 5, 6, 7}, PrimeModulus(101)));
  CHECK_THROWS_AS(perfectness_report(big, CoefficientDomain::kFullField), CapacityError);
}

TEST_CASE("consistent polynomial counts") {
  const SchemeConfig cfg = cfg5();
  const ShareTable table = dealt();
  CHECK(consistent_polynomials({}, cfg, CoefficientDomain::kFullField).size() == 6 * 7 * 7 * 7 * 7);
  const std::vector<std::uint64_t> one{3};
  CHECK(consistent_polynomials(table.select(one), cfg, CoefficientDomain::kFullField).size() == 6 * 7 * 7 * 7);
  const auto all = consistent_polynomials(table.shares(), cfg, CoefficientDomain::kFullField);
  REQUIRE(all.size() == 1);
  CHECK(all[0][2].value() == 3);

  // Brute-force count for a single share.
  std::size_t n = 0;
  for (std::uint64_t a0 = 0; a0 < 7; ++a0)
    for (std::uint64_t a1 = 0; a1 < 7; ++a1)
      for (std::uint64_t a2 = 0; a2 < 7; ++a2)
        for (std::uint64_t a3 = 0; a3 < 7; ++a3)
          for (std::uint64_t a4 = 1; a4 < 7; ++a4)
            if (oracle::eval_terms({a0, a1, a2, a3, a4}, 3, 7) == table.at(3).value.value()) ++n;
  CHECK(n == 6 * 7 * 7 * 7);

  std::vector<Share> mixed{table.at(1), Share{2, table.at(2).value + FieldElement(1, p7)}};
  mixed.push_back(table.at(3));
  mixed.push_back(table.at(4));
  mixed.push_back(table.at(5));
  mixed.push_back(table.at(6));
  CHECK_FALSE(shares_consistent(mixed, cfg, CoefficientDomain::kFullField));
}

TEST_CASE("monotonicity of consistent sets") {
  const SchemeConfig cfg = cfg5();
  const ShareTable table = dealt();
  const std::vector<std::uint64_t> a{1, 2}, b{1, 2, 5};
  const auto small = consistent_polynomials(table.select(b), cfg, CoefficientDomain::kFullField);
  const auto large = consistent_polynomials(table.select(a), cfg, CoefficientDomain::kFullField);
  for (const auto& v : small) CHECK(std::find(large.begin(), large.end(), v) != large.end());
}

TEST_CASE("conditional distributions") {
  const SchemeConfig cfg = cfg5();
  const ShareTable table = dealt();
  const std::vector<std::uint64_t> coal{3, 5, 6}, pair{1, 2};
  const auto h = conditional_distribution(table.select(coal), 2, {}, cfg, CoefficientDomain::kFullField);
  CHECK(h.point_mass());
  CHECK(h.counts[3] == h.total);

  const auto u = conditional_distribution(table.select(pair), 2, {}, cfg, CoefficientDomain::kFullField);
  CHECK(u.uniform());
  CHECK(u.total == 6 * 7 * 7);

  // Knowing s_0, s_1 and s_3 leaves only a_2 and a_4 unknown; two shares fix both.
  const std::map<unsigned, FieldElement> known{{0, {1, p7}}, {1, {2, p7}}, {3, {4, p7}}};
  const auto k = conditional_distribution(table.select(pair), 2, known, cfg, CoefficientDomain::kFullField);
  CHECK(k.point_mass());
  CHECK(k.counts[3] == k.total);
}

TEST_CASE("t-1 shares exclude the value that forces a zero blinding") {
  const SchemeConfig cfg = cfg5();
  const ShareTable table = dealt();
  const std::vector<std::uint64_t> ids{1, 2, 3, 4};
  const auto h = conditional_distribution(table.select(ids), 0, {}, cfg, CoefficientDomain::kFullField);
  CHECK_FALSE(h.uniform());
  std::size_t zeros = 0;
  for (auto c : h.counts) zeros += c == 0;
  CHECK(zeros == 1);
}

TEST_CASE("small perfectness reports") {
  const PrimeModulus p5(5);
  const SchemeConfig cfg(4, Track({1, 2, 3, 4}, p5));
  const AuditReport rep = perfectness_report(cfg, CoefficientDomain::kFullField);
  CHECK(rep.polynomial_count == 4 * 5 * 5 * 5);
  CHECK(rep.correctness_failures == 0);
  for (const auto& e : rep.entries) {
    CHECK(e.authorized == (e.verdict == Verdict::kDetermined));
    if (e.verdict == Verdict::kLeaky) CHECK_FALSE(e.witness.empty());
  }
  CHECK(rep.passed == (rep.leaky_entries == 0));

  const AuditReport strict = perfectness_report(cfg, CoefficientDomain::kPaperStrict);
  CHECK(strict.polynomial_count == 4 * 4 * 4 * 4);
  CHECK(strict.passed == (strict.correctness_failures == 0));
}

TEST_CASE("ideality") {
  CHECK(ideality_check(cfg5()));
  const auto shape = share_shape(cfg5());
  CHECK(shape.share_domain_size == 7);
  CHECK(shape.secret_domain_size == 7);
  CHECK(ideality_check(ShareShape{7, 1, 7, 1}));
  CHECK_FALSE(ideality_check(ShareShape{7, 2, 7, 1}));
  CHECK_FALSE(ideality_check(ShareShape{49, 1, 7, 1}));
}

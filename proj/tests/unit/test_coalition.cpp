#include "doctest.h"
#include "oracles.hpp"
#include "privcoal/coalition.hpp"

using namespace privcoal;

namespace {
std::vector<std::vector<std::uint64_t>> labels(const std::vector<Track>& ts) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& t : ts) out.push_back(t.values());
  return out;
}
using Sets = std::vector<std::vector<std::uint64_t>>;
}  // namespace

TEST_CASE("track enumeration") {
  const PrimeModulus p7(7), p13(13);
  CHECK(labels(enumerate_tracks(2, 3, p7)) == Sets{{1, 2}, {1, 3}, {2, 3}});
  CHECK(labels(enumerate_tracks(3, 3, p7)) == Sets{{1, 2, 3}});
  const auto all = enumerate_tracks(4, 13, p13);
  CHECK(all.size() == oracle::binomial(13, 4));
  CHECK(all.front().values() == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(all.back().values() == std::vector<std::uint64_t>{10, 11, 12, 13});
  CHECK(all.back()[3].value() == 0);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK_THROWS_AS(enumerate_tracks(4, 3, p7), ParameterError);
  CHECK_THROWS_AS(enumerate_tracks(2, 8, p7), ParameterError);
}

TEST_CASE("parameter validation names the inequality") {
  CoalitionQuery q{.t = 5, .j = 1, .r = 3, .p = 7, .N = 6};
  try {
    q.validate();
    FAIL("expected a parameter error");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("t-r <= j") != std::string::npos);
  }
  CHECK_THROWS_AS((CoalitionQuery{.t = 5, .j = 2, .r = 3, .p = 8, .N = 6}).validate(), ParameterError);
  CHECK_THROWS_AS((CoalitionQuery{.t = 5, .j = 2, .r = 3, .p = 7, .N = 8}).validate(), ParameterError);
  CHECK_THROWS_AS((CoalitionQuery{.t = 5, .j = 2, .r = 2, .p = 7, .N = 6}).validate(), ParameterError);
  CHECK_THROWS_AS((CoalitionQuery{.t = 2, .j = 1, .r = 1, .p = 7, .N = 6}).validate(), ParameterError);
  CHECK_THROWS_AS((CoalitionQuery{.t = 11, .j = 5, .r = 6, .p = 7, .N = 6}).validate(), ParameterError);
  CHECK_NOTHROW((CoalitionQuery{.t = 7, .j = 3, .r = 4, .p = 13, .N = 13}).validate());
  CHECK(valid_lengths(7, 3) == std::vector<unsigned>{4, 5, 6});
  CHECK(valid_lengths(7, 1) == std::vector<unsigned>{6});
  CHECK(valid_lengths(5, 2) == std::vector<unsigned>{3, 4});
}

TEST_CASE("privilege predicates on examples") {
  const PrimeModulus p7(7), p13(13);
  CHECK(is_privileged(Track({1, 2, 4}, p7), 5, 2));
  CHECK(is_privileged(Track({1, 2, 5, 6}, p7), 5, 1));
  CHECK_FALSE(is_privileged(Track({1, 2, 3}, p7), 5, 2));
  CHECK_FALSE(is_privileged(Track({1, 2, 4}, p7), 5, 0));
  CHECK_FALSE(is_privileged(Track({1, 2, 4}, p7), 5, 4));
  CHECK(privileged_rank_oracle(Track({1, 2, 4}, p7), 5, 2));
  CHECK(privileged_rank_oracle(Track({1, 2, 4, 5}, p7), 5, 2));
  CHECK_FALSE(privileged_rank_oracle(Track({1, 2, 3}, p7), 5, 2));
  CHECK(lemma2_condition(Track({1, 2, 4}, p7), Track({3, 5}, p7), 5, 2));
  CHECK_FALSE(lemma2_condition(Track({1, 2, 3}, p7), Track({4, 5}, p7), 5, 2));
  CHECK_THROWS_AS(lemma2_condition(Track({1, 2, 3}, p7), Track({3, 5}, p7), 5, 2), ParameterError);
  CHECK_THROWS_AS(lemma2_condition(Track({1, 2, 3}, p7), Track({5}, p7), 5, 2), ParameterError);
  CHECK(is_minimal_privileged(Track({1, 2, 4}, p7), 5, 2));
  CHECK_FALSE(is_minimal_privileged(Track({1, 2, 4, 5}, p7), 5, 2));
  CHECK(is_minimal_privileged(Track({1, 5, 8, 12}, p13), 7, 3));
  CHECK_FALSE(is_unextended(Track({1, 2, 3, 4, 5}, p7), 5, 2));
  CHECK_FALSE(is_unextended(Track({2, 3, 4, 5, 6}, p7), 5, 1));
  CHECK(is_unextended(Track({1, 2, 3, 4, 5, 6, 7}, PrimeModulus(22787)), 7, 3));
  CHECK_THROWS_AS(is_privileged(Track({1, 2, 3, 4, 5}, p7), 5, 2), ParameterError);
}

TEST_CASE("single-element extension reduces to one tau") {
  const PrimeModulus p13(13);
  oracle::subsets(5, 12, [&](const oracle::Vec& l) {
    const Track tr(l, p13);
    for (unsigned j = 1; j <= 4; ++j) {
      for (std::uint64_t u = 1; u < 13; ++u) {
        if (tr.contains(u)) continue;
        const bool expect = oracle::tau_subset_sum(l, 6 - 1 - j, 13) == 0;
        CHECK(lemma2_condition(tr, Track({u}, p13), 6, j) == expect);
      }
    }
  });
}

TEST_CASE("predicate agrees with the kernel oracle, including label p") {
  for (std::uint64_t p : {7ULL, 11ULL, 13ULL}) {
    const PrimeModulus m(p);
    for (unsigned t = 3; t <= 6; ++t) {
      for (unsigned r = 1; r < t; ++r) {
        oracle::subsets(r, static_cast<unsigned>(p), [&](const oracle::Vec& l) {
          const Track tr(l, m, LabelRange::kUpToFieldOrder);
          for (unsigned j = 0; j < t; ++j) {
            const bool expect = oracle::privileged_kernel(l, t, j, p);
            CHECK(is_privileged(tr, t, j) == expect);
            CHECK(privileged_rank_oracle(tr, t, j) == expect);
          }
        });
      }
    }
  }
}

TEST_CASE("privileged coalition examples") {
  auto r = privileged_coalitions({.t = 7, .j = 3, .r = 4, .p = 13, .N = 13});
  CHECK(labels(r.coalitions) == Sets{{1, 5, 8, 12}, {2, 3, 10, 11}, {4, 6, 7, 9}});
  CHECK(r.count() == 3);
  CHECK(labels(privileged_coalitions({.t = 7, .j = 3, .r = 4, .p = 17, .N = 13}).coalitions) ==
        Sets{{6, 7, 10, 11}});
  CHECK(labels(privileged_coalitions({.t = 5, .j = 2, .r = 3, .p = 7, .N = 6}).coalitions) ==
        Sets{{1, 2, 4}, {3, 5, 6}});
  CHECK_THROWS_AS(privileged_coalitions({.t = 5, .j = 1, .r = 3, .p = 7, .N = 6}), ParameterError);
  CHECK(minimal_privileged_coalitions({.t = 5, .j = 2, .r = 4, .p = 7, .N = 6}).coalitions.empty());
}

TEST_CASE("minimal sweep") {
  const auto s = minimal_privileged_sweep(7, 1, 13, 13);
  CHECK(s.count() == 72);
  CHECK(s.all_lengths);
  CHECK(s.minimal_only);
  CHECK(minimal_privileged_sweep(7, 5, 67, 13).count() == 0);
  CHECK_FALSE(minimal_privileged_sweep(7, 5, 67, 13).r_min);
  CHECK_FALSE(minimal_privileged_sweep(7, 5, 67, 13).N_min);
  for (unsigned j = 1; j <= 5; ++j) {
    const auto rep = minimal_privileged_sweep(7, j, 13, 13, 4);
    const auto by = count_by_length(rep);
    const auto expect = oracle::minimal_counts_by_length(7, j, 13, 13);
    for (const auto& [r, n] : expect) CHECK(by.count(r) ? by.at(r) == n : n == 0);
    for (std::size_t i = 1; i < rep.coalitions.size(); ++i) {
      const auto& a = rep.coalitions[i - 1];
      const auto& b = rep.coalitions[i];
      CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
  }
}

TEST_CASE("shortest sweep") {
  const auto s19 = shortest_privileged_coalitions(7, 3, 19, 13);
  REQUIRE(s19.r_min);
  CHECK(*s19.r_min == 5);
  CHECK(s19.coalitions.front().values() == std::vector<std::uint64_t>{1, 3, 4, 5, 13});
  CHECK(*s19.N_min == s19.count());
  const auto s31 = shortest_privileged_coalitions(7, 3, 31, 13);
  CHECK(labels(s31.coalitions) == Sets{{1, 3, 5, 8, 9}});
  CHECK(*shortest_privileged_coalitions(7, 3, 13, 13).r_min == 4);
  const auto none = shortest_privileged_coalitions(7, 3, 22787, 13);
  CHECK(none.coalitions.empty());
  CHECK_FALSE(none.r_min);
}

TEST_CASE("worker count does not change results") {
  const CoalitionQuery q{.t = 7, .j = 3, .r = 5, .p = 17, .N = 13};
  const auto one = privileged_coalitions(q, 1);
  for (unsigned w : {2U, 3U, 8U, 64U}) CHECK(privileged_coalitions(q, w) == one);
  CHECK(minimal_privileged_sweep(7, 2, 13, 13, 1) == minimal_privileged_sweep(7, 2, 13, 13, 5));
}

#include "privcoal/audit.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <unordered_map>

#include "privcoal/coalition.hpp"

namespace privcoal {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

std::uint64_t lowest_value(CoefficientDomain domain, unsigned index, unsigned t) {
  if (domain == CoefficientDomain::kPaperStrict) return 1;
  return index + 1 == t ? 1 : 0;
}

// Odometer over every coefficient vector of the domain, a_0 varying fastest.
void for_each_polynomial(unsigned t, std::uint64_t p, CoefficientDomain domain,
                         const std::function<void(std::span<const std::uint64_t>)>& visit) {
  std::vector<std::uint64_t> a(t);
  for (unsigned i = 0; i < t; ++i) a[i] = lowest_value(domain, i, t);
  while (true) {
    visit(a);
    unsigned i = 0;
    while (i < t && a[i] + 1 == p) {
      a[i] = lowest_value(domain, i, t);
      ++i;
    }
    if (i == t) return;
    ++a[i];
  }
}

std::uint64_t evaluate(std::span<const std::uint64_t> a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = detail::add_mod(detail::mul_mod(acc, x, p), a[i], p);
  return acc;
}

bool matches(std::span<const std::uint64_t> a, std::span<const Share> observed, std::uint64_t p) {
  return std::all_of(observed.begin(), observed.end(),
                     [&](const Share& s) { return evaluate(a, s.id, p) == s.value.value(); });
}

void check_observation(std::span<const Share> observed, const SchemeConfig& cfg) {
  for (const auto& s : observed) {
    if (!cfg.identities().contains(s.id)) throw ParameterError("identity " + num(s.id) + " is not a participant");
    if (s.value.modulus() != cfg.modulus()) throw ParameterError("share over a different modulus");
  }
}

// a * d == b * c without overflow.
bool cross_equal(std::uint64_t a, std::uint64_t d, std::uint64_t b, std::uint64_t c) {
  return static_cast<unsigned __int128>(a) * d == static_cast<unsigned __int128>(b) * c;
}

bool proportional(const std::vector<std::uint64_t>& group, std::uint64_t group_total,
                  const std::vector<std::uint64_t>& prior, std::uint64_t prior_total) {
  for (std::size_t v = 0; v < group.size(); ++v) {
    if (!cross_equal(group[v], prior_total, prior[v], group_total)) return false;
  }
  return true;
}

struct Tally {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

}  // namespace

void require_audit_capacity(unsigned t, PrimeModulus modulus) {
  unsigned __int128 size = 1;
  for (unsigned i = 0; i < t; ++i) {
    size *= modulus.value();
    if (size > kAuditCapacity) {
      throw CapacityError("exhaustive audit needs p^t <= " + num(kAuditCapacity) + "; p=" +
                          num(modulus.value()) + ", t=" + num(t) + " exceeds it");
    }
  }
}

std::vector<CoeffVector> consistent_polynomials(std::span<const Share> observed, const SchemeConfig& cfg,
                                                CoefficientDomain domain) {
  require_audit_capacity(cfg.t(), cfg.modulus());
  check_observation(observed, cfg);
  const std::uint64_t p = cfg.modulus().value();
  std::vector<CoeffVector> out;
  for_each_polynomial(cfg.t(), p, domain, [&](std::span<const std::uint64_t> a) {
    if (matches(a, observed, p)) out.emplace_back(a, cfg.modulus());
  });
  return out;
}

bool shares_consistent(std::span<const Share> observed, const SchemeConfig& cfg, CoefficientDomain domain) {
  require_audit_capacity(cfg.t(), cfg.modulus());
  check_observation(observed, cfg);
  const std::uint64_t p = cfg.modulus().value();
  bool found = false;
  for_each_polynomial(cfg.t(), p, domain, [&](std::span<const std::uint64_t> a) {
    found = found || matches(a, observed, p);
  });
  return found;
}

bool Histogram::point_mass() const {
  return total > 0 && std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; }) == 1;
}

bool Histogram::uniform() const {
  return total > 0 && std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == counts[0]; });
}

Histogram conditional_distribution(std::span<const Share> observed, unsigned j,
                                   const std::map<unsigned, FieldElement>& known, const SchemeConfig& cfg,
                                   CoefficientDomain domain) {
  require_audit_capacity(cfg.t(), cfg.modulus());
  check_observation(observed, cfg);
  if (j >= cfg.secret_count()) {
    throw ParameterError("secret index j=" + num(j) + " must lie in 0..t-2");
  }
  for (const auto& [index, value] : known) {
    if (index == j) throw ParameterError("the target secret cannot also be assumed known");
    if (index >= cfg.secret_count()) throw ParameterError("known secret index " + num(index) + " out of range");
    if (value.modulus() != cfg.modulus()) throw ParameterError("known secret over a different modulus");
  }
  const std::uint64_t p = cfg.modulus().value();
  Histogram h{.counts = std::vector<std::uint64_t>(p, 0), .total = 0};
  for_each_polynomial(cfg.t(), p, domain, [&](std::span<const std::uint64_t> a) {
    for (const auto& [index, value] : known) {
      if (a[index] != value.value()) return;
    }
    if (!matches(a, observed, p)) return;
    ++h.counts[a[j]];
    ++h.total;
  });
  return h;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kDetermined:
      return "determined";
    case Verdict::kUniform:
      return "uniform";
    case Verdict::kLeaky:
      return "leaky";
  }
  return "unknown";
}

AuditReport perfectness_report(const SchemeConfig& cfg, CoefficientDomain domain) {
  const unsigned t = cfg.t();
  const PrimeModulus modulus = cfg.modulus();
  const std::uint64_t p = modulus.value();
  const std::size_t n = cfg.n();
  require_audit_capacity(t, modulus);
  if (n > 20) throw CapacityError("exhaustive audit walks all 2^n subsets; n=" + num(n) + " exceeds 20");
  if (t > p) throw ParameterError("threshold t=" + num(t) + " exceeds the field order p=" + num(p));

  AuditReport report{.t = t, .p = p, .identities = cfg.identities().values(), .domain = domain};

  // Coefficients and shares of every polynomial in the domain.
  std::vector<std::uint64_t> coeffs;
  std::vector<std::uint64_t> shares;
  const auto ids = report.identities;
  for_each_polynomial(t, p, domain, [&](std::span<const std::uint64_t> a) {
    coeffs.insert(coeffs.end(), a.begin(), a.end());
    for (std::uint64_t id : ids) shares.push_back(evaluate(a, id, p));
    ++report.polynomial_count;
  });
  const std::uint64_t count = report.polynomial_count;

  const std::uint64_t subsets = std::uint64_t{1} << n;
  // authorized[mask][j]
  std::vector<std::vector<char>> authorized(subsets, std::vector<char>(t - 1, 0));
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto size = static_cast<unsigned>(std::popcount(mask));
    if (size > t || size == 0) continue;
    const Track sub = cfg.identities().subtrack(mask);
    for (unsigned j = 0; j + 1 < t; ++j) {
      authorized[mask][j] = static_cast<char>(size == t || privileged_rank_oracle(sub, t, j));
    }
  }

  const unsigned secrets = t - 1;
  for (unsigned j = 0; j < secrets; ++j) {
    for (std::uint64_t known_mask = 0; known_mask < (std::uint64_t{1} << secrets); ++known_mask) {
      if (known_mask >> j & 1U) continue;
      std::vector<unsigned> known;
      for (unsigned i = 0; i < secrets; ++i) {
        if (known_mask >> i & 1U) known.push_back(i);
      }
      auto known_key = [&](std::uint64_t poly) {
        std::uint64_t key = 0;
        for (unsigned i : known) key = key * p + coeffs[poly * t + i];
        return key;
      };

      std::unordered_map<std::uint64_t, Tally> prior;
      for (std::uint64_t poly = 0; poly < count; ++poly) {
        Tally& tally = prior[known_key(poly)];
        if (tally.counts.empty()) tally.counts.assign(p, 0);
        ++tally.counts[coeffs[poly * t + j]];
        ++tally.total;
      }

      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        if (static_cast<unsigned>(std::popcount(mask)) > t) continue;
        AuditEntry entry{.subset = {}, .j = j, .known = known, .authorized = authorized[mask][j] != 0};
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1U) entry.subset.push_back(ids[i]);
        }

        // Group key: the known secret values, then the subset's shares.
        std::unordered_map<std::uint64_t, Tally> groups;
        std::unordered_map<std::uint64_t, std::uint64_t> group_prior_key;
        for (std::uint64_t poly = 0; poly < count; ++poly) {
          const std::uint64_t kk = known_key(poly);
          std::uint64_t key = kk;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) key = key * p + shares[poly * n + i];
          }
          Tally& tally = groups[key];
          if (tally.counts.empty()) {
            tally.counts.assign(p, 0);
            group_prior_key[key] = kk;
          }
          ++tally.counts[coeffs[poly * t + j]];
          ++tally.total;
        }
        entry.observations = groups.size();

        bool all_point_mass = true;
        bool all_proportional = true;
        const std::vector<std::uint64_t>* witness_point = nullptr;
        const std::vector<std::uint64_t>* witness_moved = nullptr;
        for (const auto& [key, tally] : groups) {
          const Tally& base = prior.at(group_prior_key.at(key));
          const Histogram h{.counts = tally.counts, .total = tally.total};
          if (!h.point_mass()) {
            all_point_mass = false;
            if (!witness_point) witness_point = &tally.counts;
          }
          if (!proportional(tally.counts, tally.total, base.counts, base.total)) {
            all_proportional = false;
            if (!witness_moved) witness_moved = &tally.counts;
          }
        }

        if (entry.authorized) {
          if (all_point_mass) {
            entry.verdict = Verdict::kDetermined;
          } else {
            entry.verdict = all_proportional ? Verdict::kUniform : Verdict::kLeaky;
            entry.witness = *witness_point;
            ++report.correctness_failures;
          }
        } else if (all_proportional) {
          entry.verdict = Verdict::kUniform;
        } else {
          entry.verdict = Verdict::kLeaky;
          entry.witness = *witness_moved;
          ++report.leaky_entries;
        }
        report.entries.push_back(std::move(entry));
      }
    }
  }

  report.passed = report.correctness_failures == 0 &&
                  (domain == CoefficientDomain::kPaperStrict || report.leaky_entries == 0);
  return report;
}

ShareShape share_shape(const SchemeConfig& cfg) {
  const std::uint64_t p = cfg.modulus().value();
  return {.share_domain_size = p, .elements_per_share = 1, .secret_domain_size = p, .elements_per_secret = 1};
}

bool ideality_check(const ShareShape& shape) {
  return shape.share_domain_size == shape.secret_domain_size &&
         shape.elements_per_share == shape.elements_per_secret;
}

bool ideality_check(const SchemeConfig& cfg) { return ideality_check(share_shape(cfg)); }

}  // namespace privcoal

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "privcoal/scheme.hpp"

namespace privcoal {

// Exhaustive enumeration is refused above this many candidate polynomials.
inline constexpr std::uint64_t kAuditCapacity = 100'000'000;

// Throws CapacityError when p^t exceeds kAuditCapacity.
void require_audit_capacity(unsigned t, PrimeModulus modulus);

// Every coefficient vector of the domain whose evaluations match the given
// shares.
std::vector<CoeffVector> consistent_polynomials(std::span<const Share> observed, const SchemeConfig& cfg,
                                                CoefficientDomain domain);

bool shares_consistent(std::span<const Share> observed, const SchemeConfig& cfg, CoefficientDomain domain);

// Exact counts of s_j over the consistent polynomials. total == 0 means the
// observation itself is impossible.
struct Histogram {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  bool point_mass() const;
  bool uniform() const;
};

// Distribution of s_j given the observed shares and the known values of the
// other secrets listed in `known` (index -> value).
Histogram conditional_distribution(std::span<const Share> observed, unsigned j,
                                   const std::map<unsigned, FieldElement>& known, const SchemeConfig& cfg,
                                   CoefficientDomain domain);

enum class Verdict { kDetermined, kUniform, kLeaky };

std::string to_string(Verdict verdict);

struct AuditEntry {
  std::vector<std::uint64_t> subset;
  unsigned j = 0;
  // Indices of the other secrets assumed known.
  std::vector<unsigned> known;
  bool authorized = false;
  Verdict verdict = Verdict::kUniform;
  // Number of distinct (shares, known values) observations examined.
  std::size_t observations = 0;
  // For a failing entry, the first offending conditional histogram.
  std::vector<std::uint64_t> witness;
};

struct AuditReport {
  unsigned t = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> identities;
  CoefficientDomain domain = CoefficientDomain::kFullField;
  std::uint64_t polynomial_count = 0;
  std::vector<AuditEntry> entries;
  // Authorized entries that failed to be a point mass.
  std::size_t correctness_failures = 0;
  // Unauthorized entries whose conditional distribution moved.
  std::size_t leaky_entries = 0;
  // Full-field: no correctness failures and no leaks. Paper-strict: leaks
  // are reported but only correctness failures fail the audit.
  bool passed = false;
};

// For every subset A with |A| <= t, every j in 0..t-2 and every set T of
// other secret indices: authorized A must see a point mass in every
// observation; unauthorized A must see exactly the distribution of s_j given
// T alone.
AuditReport perfectness_report(const SchemeConfig& cfg, CoefficientDomain domain);

// Size of one participant's share and of one secret.
struct ShareShape {
  std::uint64_t share_domain_size = 0;
  std::size_t elements_per_share = 0;
  std::uint64_t secret_domain_size = 0;
  std::size_t elements_per_secret = 0;
};

ShareShape share_shape(const SchemeConfig& cfg);
bool ideality_check(const ShareShape& shape);
bool ideality_check(const SchemeConfig& cfg);

}  // namespace privcoal

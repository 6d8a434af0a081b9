#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "privcoal/field.hpp"
#include "privcoal/symfun.hpp"

namespace privcoal {

// Which coefficient vectors the dealer may draw.
//  kFullField:   secrets anywhere in F_p, blinding coefficient nonzero.
//  kPaperStrict: every coefficient nonzero.
enum class CoefficientDomain { kFullField, kPaperStrict };

std::string to_string(CoefficientDomain domain);
// Accepts "full-field" and "paper-strict".
CoefficientDomain parse_domain(const std::string& text);

// Threshold t over F_p with n public identities, t <= n <= p-1.
class SchemeConfig {
 public:
  SchemeConfig(unsigned t, Track identities);

  unsigned t() const { return t_; }
  PrimeModulus modulus() const { return identities_.modulus(); }
  const Track& identities() const { return identities_; }
  std::size_t n() const { return identities_.size(); }
  // Number of secrets s_0..s_{t-2}.
  unsigned secret_count() const { return t_ - 1; }

 private:
  unsigned t_;
  Track identities_;
};

// s_0..s_{t-2} followed by the nonzero blinding coefficient a_{t-1}.
struct SecretVector {
  std::vector<FieldElement> secrets;
  FieldElement blinding;

  CoeffVector coefficients() const;
};

SecretVector make_secret_vector(std::span<const std::uint64_t> secrets, std::uint64_t blinding,
                                PrimeModulus modulus);

// Pseudo-random secrets; the result depends only on (seed, t, p, domain).
SecretVector random_secret_vector(const SchemeConfig& cfg, std::uint64_t seed,
                                  CoefficientDomain domain = CoefficientDomain::kFullField);

struct Share {
  std::uint64_t id;
  FieldElement value;

  friend bool operator==(const Share&, const Share&) = default;
};

// One share per participant, ordered by identity.
class ShareTable {
 public:
  ShareTable(PrimeModulus modulus, std::vector<Share> shares);

  PrimeModulus modulus() const { return modulus_; }
  std::span<const Share> shares() const { return shares_; }
  std::size_t size() const { return shares_.size(); }
  const Share& at(std::uint64_t id) const;
  // Shares of the given identities, ordered by identity.
  std::vector<Share> select(std::span<const std::uint64_t> ids) const;

  friend bool operator==(const ShareTable&, const ShareTable&) = default;

 private:
  PrimeModulus modulus_;
  std::vector<Share> shares_;
};

ShareTable deal(const SchemeConfig& cfg, const SecretVector& sv);

enum class MemberKind { kThresholdSet, kPrivilegedCoalition, kUnextendedTrack };

std::string to_string(MemberKind kind);

struct AccessMember {
  Track ids;
  MemberKind kind;
};

// (Gamma_j)_min for j = 0..t-2, each family sorted by (size, lexicographic).
struct AccessStructure {
  unsigned t = 0;
  std::vector<std::vector<AccessMember>> minimal_sets;

  std::size_t unextended_count(unsigned j) const;
};

AccessStructure derive_access_structure(const SchemeConfig& cfg);

// Solves the t x t Vandermonde system on the t smallest identities present.
std::vector<FieldElement> solve_coefficients(std::span<const Share> shares, unsigned t,
                                             PrimeModulus modulus);
FieldElement recover_full(std::span<const Share> shares, unsigned t, unsigned j, PrimeModulus modulus);

struct PrivilegedRecovery {
  FieldElement value;
  Track extension;
};

// Recovers a_j from fewer than t shares of a privileged coalition via the
// cofactor expansion of the system extended by t-r virtual points. Only the
// known shares enter the sum; the coefficients of the virtual shares are
// checked to vanish.
FieldElement recover_privileged_with(std::span<const Share> coalition, const Track& extension,
                                     unsigned t, unsigned j);
// Extension = the t-r smallest nonzero residues outside the coalition.
PrivilegedRecovery recover_privileged(std::span<const Share> coalition, unsigned t, unsigned j,
                                      PrimeModulus modulus);

enum class RecoveryRoute { kFullSolve, kPrivilegedFormula };

struct Recovery {
  FieldElement value;
  RecoveryRoute route;
  // Identities whose shares were used.
  Track used;
  std::optional<Track> extension;
};

// Dispatches to recover_full for |subset| >= t, otherwise to
// recover_privileged on the first privileged sub-track (shortest, then
// lexicographic). Throws AuthorizationError when none exists.
Recovery recover(std::span<const Share> subset, unsigned j, const SchemeConfig& cfg);

}  // namespace privcoal

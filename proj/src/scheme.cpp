#include "privcoal/scheme.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>

#include "privcoal/coalition.hpp"
#include "privcoal/linalg.hpp"

namespace privcoal {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

// Identities of a share list as a track; rejects duplicates and zero.
Track ids_of(std::span<const Share> shares, PrimeModulus modulus) {
  std::vector<std::uint64_t> ids;
  ids.reserve(shares.size());
  for (const auto& s : shares) {
    if (s.value.modulus() != modulus) throw ParameterError("share over a different modulus");
    ids.push_back(s.id);
  }
  return Track(std::move(ids), modulus);
}

std::vector<Share> sorted_by_id(std::span<const Share> shares) {
  std::vector<Share> out(shares.begin(), shares.end());
  std::sort(out.begin(), out.end(), [](const Share& a, const Share& b) { return a.id < b.id; });
  return out;
}

// Uniform draw from [low, p) by rejection on 64-bit words.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t low, std::uint64_t p) {
  const std::uint64_t range = p - low;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return low + x % range;
}

FieldElement sign(unsigned exponent, PrimeModulus modulus) {
  return exponent % 2 == 0 ? FieldElement::one(modulus) : -FieldElement::one(modulus);
}

}  // namespace

std::string to_string(CoefficientDomain domain) {
  return domain == CoefficientDomain::kFullField ? "full-field" : "paper-strict";
}

CoefficientDomain parse_domain(const std::string& text) {
  if (text == "full-field") return CoefficientDomain::kFullField;
  if (text == "paper-strict") return CoefficientDomain::kPaperStrict;
  throw ParameterError("unknown coefficient domain '" + text + "'");
}

SchemeConfig::SchemeConfig(unsigned t, Track identities) : t_(t), identities_(std::move(identities)) {
  if (t_ < 2) throw ParameterError("threshold t=" + num(t_) + " must be at least 2");
  if (t_ > identities_.size()) {
    throw ParameterError("threshold t=" + num(t_) + " exceeds the participant count n=" +
                         num(identities_.size()));
  }
}

CoeffVector SecretVector::coefficients() const {
  std::vector<FieldElement> all = secrets;
  all.push_back(blinding);
  return CoeffVector(std::move(all));
}

SecretVector make_secret_vector(std::span<const std::uint64_t> secrets, std::uint64_t blinding,
                                PrimeModulus modulus) {
  SecretVector sv{.secrets = {}, .blinding = FieldElement(blinding, modulus)};
  for (std::uint64_t s : secrets) {
    if (s >= modulus.value()) {
      throw ParameterError("secret " + num(s) + " is not a residue mod " + num(modulus.value()));
    }
    sv.secrets.emplace_back(s, modulus);
  }
  if (blinding >= modulus.value()) {
    throw ParameterError("blinding " + num(blinding) + " is not a residue mod " + num(modulus.value()));
  }
  return sv;
}

SecretVector random_secret_vector(const SchemeConfig& cfg, std::uint64_t seed, CoefficientDomain domain) {
  const PrimeModulus modulus = cfg.modulus();
  const std::uint64_t p = modulus.value();
  std::mt19937_64 rng(seed);
  const std::uint64_t secret_low = domain == CoefficientDomain::kFullField ? 0 : 1;
  SecretVector sv{.secrets = {}, .blinding = FieldElement::zero(modulus)};
  for (unsigned i = 0; i < cfg.secret_count(); ++i) sv.secrets.emplace_back(draw(rng, secret_low, p), modulus);
  sv.blinding = FieldElement(draw(rng, 1, p), modulus);
  return sv;
}

ShareTable::ShareTable(PrimeModulus modulus, std::vector<Share> shares)
    : modulus_(modulus), shares_(sorted_by_id(shares)) {
  ids_of(shares_, modulus_);
}

const Share& ShareTable::at(std::uint64_t id) const {
  auto it = std::lower_bound(shares_.begin(), shares_.end(), id,
                             [](const Share& s, std::uint64_t v) { return s.id < v; });
  if (it == shares_.end() || it->id != id) {
    throw ParameterError("identity " + num(id) + " is not a participant");
  }
  return *it;
}

std::vector<Share> ShareTable::select(std::span<const std::uint64_t> ids) const {
  std::vector<Share> out;
  for (std::uint64_t id : ids) out.push_back(at(id));
  return sorted_by_id(out);
}

ShareTable deal(const SchemeConfig& cfg, const SecretVector& sv) {
  if (sv.secrets.size() != cfg.secret_count()) {
    throw ParameterError("expected " + num(cfg.secret_count()) + " secrets, got " + num(sv.secrets.size()));
  }
  if (sv.blinding.is_zero()) throw ParameterError("the blinding coefficient must be nonzero");
  const CoeffVector a = sv.coefficients();
  if (a.modulus() != cfg.modulus()) throw ParameterError("secrets over a different modulus");
  std::vector<Share> shares;
  for (const auto& l : cfg.identities().elements()) shares.push_back({l.value(), poly_eval(a, l)});
  return ShareTable(cfg.modulus(), std::move(shares));
}

std::string to_string(MemberKind kind) {
  switch (kind) {
    case MemberKind::kThresholdSet:
      return "threshold-set";
    case MemberKind::kPrivilegedCoalition:
      return "privileged-coalition";
    case MemberKind::kUnextendedTrack:
      return "unextended-track";
  }
  return "unknown";
}

std::size_t AccessStructure::unextended_count(unsigned j) const {
  const auto& family = minimal_sets.at(j);
  return static_cast<std::size_t>(std::count_if(family.begin(), family.end(), [](const AccessMember& m) {
    return m.kind == MemberKind::kUnextendedTrack;
  }));
}

AccessStructure derive_access_structure(const SchemeConfig& cfg) {
  const unsigned t = cfg.t();
  const std::size_t n = cfg.n();
  if (n > 24) {
    throw CapacityError("access-structure derivation walks all 2^n subsets; n=" + num(n) +
                        " exceeds the limit of 24");
  }
  if (t > cfg.modulus().value()) {
    throw ParameterError("threshold t=" + num(t) + " exceeds the field order p=" + num(cfg.modulus().value()));
  }
  const Track& ids = cfg.identities();
  const std::uint64_t subsets = std::uint64_t{1} << n;

  auto by_size_then_lex = [](const AccessMember& a, const AccessMember& b) {
    if (a.ids.size() != b.ids.size()) return a.ids.size() < b.ids.size();
    return a.ids < b.ids;
  };

  AccessStructure out{.t = t, .minimal_sets = std::vector<std::vector<AccessMember>>(t - 1)};
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    if (std::popcount(mask) == static_cast<int>(t)) {
      out.minimal_sets[0].push_back({ids.subtrack(mask), MemberKind::kThresholdSet});
    }
  }
  std::sort(out.minimal_sets[0].begin(), out.minimal_sets[0].end(), by_size_then_lex);

  std::vector<char> dominated(subsets, 0);
  for (unsigned j = 1; j + 1 < t; ++j) {
    std::fill(dominated.begin(), dominated.end(), 0);
    auto& family = out.minimal_sets[j];
    // Walk masks in increasing popcount so that every proper subset is
    // classified before its supersets.
    for (unsigned size = 1; size <= t; ++size) {
      for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        if (std::popcount(mask) != static_cast<int>(size)) continue;
        bool sub_dominated = false;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          const std::uint64_t bit = rest & (~rest + 1);
          if (dominated[mask ^ bit]) {
            sub_dominated = true;
            break;
          }
        }
        if (size == t) {
          if (!sub_dominated) family.push_back({ids.subtrack(mask), MemberKind::kUnextendedTrack});
          continue;
        }
        const Track sub = ids.subtrack(mask);
        const bool privileged = privileged_rank_oracle(sub, t, j);
        dominated[mask] = static_cast<char>(privileged || sub_dominated);
        if (privileged && !sub_dominated) {
          if (!is_privileged(sub, t, j)) {
            throw std::logic_error("rank oracle and tau window disagree on " + sub.to_string());
          }
          family.push_back({sub, MemberKind::kPrivilegedCoalition});
        }
      }
    }
    std::sort(family.begin(), family.end(), by_size_then_lex);
  }
  return out;
}

std::vector<FieldElement> solve_coefficients(std::span<const Share> shares, unsigned t, PrimeModulus modulus) {
  if (shares.size() < t) {
    throw ParameterError("full recovery needs t=" + num(t) + " shares, got " + num(shares.size()));
  }
  ids_of(shares, modulus);
  std::vector<Share> used = sorted_by_id(shares);
  used.erase(used.begin() + t, used.end());
  std::vector<FieldElement> points;
  std::vector<FieldElement> ys;
  for (const auto& s : used) {
    points.emplace_back(s.id, modulus);
    ys.push_back(s.value);
  }
  auto solution = Matrix::power_matrix(points, t).solve(ys);
  if (!solution) throw std::logic_error("Vandermonde system on distinct identities is singular");
  return *solution;
}

FieldElement recover_full(std::span<const Share> shares, unsigned t, unsigned j, PrimeModulus modulus) {
  if (j >= t) throw ParameterError("coefficient index j=" + num(j) + " must be below t=" + num(t));
  return solve_coefficients(shares, t, modulus)[j];
}

FieldElement recover_privileged_with(std::span<const Share> coalition, const Track& extension,
                                     unsigned t, unsigned j) {
  if (coalition.empty()) throw ParameterError("empty coalition");
  const PrimeModulus modulus = extension.modulus();
  const std::vector<Share> known = sorted_by_id(coalition);
  const Track coalition_ids = ids_of(known, modulus);
  const std::size_t r = known.size();
  if (r >= t) throw ParameterError("privileged recovery needs fewer than t=" + num(t) + " shares");
  if (extension.size() != t - r) {
    throw ParameterError("extension length " + num(extension.size()) + " must equal t-r=" + num(t - r));
  }
  if (!coalition_ids.disjoint_with(extension)) throw ParameterError("extension overlaps the coalition");
  if (!privileged_rank_oracle(coalition_ids, t, j)) {
    throw AuthorizationError("coalition " + coalition_ids.to_string() + " is not authorized for s_" + num(j));
  }

  // Points of the extended system: the coalition, then the extension.
  std::vector<FieldElement> points(coalition_ids.elements().begin(), coalition_ids.elements().end());
  points.insert(points.end(), extension.elements().begin(), extension.elements().end());
  const std::size_t omega = t - 1 - j;

  // Signed cofactor of row k (0-based) in column j of the power matrix.
  auto cofactor = [&](std::size_t k) {
    std::vector<FieldElement> rest = points;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    return sign(static_cast<unsigned>(k + j), modulus) * vandermonde_det(rest, modulus) *
           elem_sym(rest, omega, modulus);
  };

  for (std::size_t k = r; k < t; ++k) {
    if (!cofactor(k).is_zero()) {
      throw std::logic_error("coefficient of the virtual share at " + num(points[k].value()) +
                             " does not vanish for a privileged coalition");
    }
  }
  FieldElement sum = FieldElement::zero(modulus);
  for (std::size_t k = 0; k < r; ++k) sum += cofactor(k) * known[k].value;
  return sum / vandermonde_det(points, modulus);
}

PrivilegedRecovery recover_privileged(std::span<const Share> coalition, unsigned t, unsigned j,
                                      PrimeModulus modulus) {
  if (coalition.size() >= t) {
    throw ParameterError("privileged recovery needs fewer than t=" + num(t) + " shares");
  }
  const Track coalition_ids = ids_of(coalition, modulus);
  const std::size_t needed = t - coalition.size();
  std::vector<std::uint64_t> extension;
  for (std::uint64_t v = 1; v < modulus.value() && extension.size() < needed; ++v) {
    if (!coalition_ids.contains(v)) extension.push_back(v);
  }
  if (extension.size() < needed) {
    throw ParameterError("F_" + num(modulus.value()) + " has too few residues to extend a coalition of " +
                         num(coalition.size()) + " to t=" + num(t) + " points");
  }
  Track ext(std::move(extension), modulus);
  FieldElement value = recover_privileged_with(coalition, ext, t, j);
  return {value, std::move(ext)};
}

Recovery recover(std::span<const Share> subset, unsigned j, const SchemeConfig& cfg) {
  const unsigned t = cfg.t();
  const PrimeModulus modulus = cfg.modulus();
  if (j + 1 >= t) {
    throw ParameterError("secret index j=" + num(j) + " must lie in 0..t-2=" + num(t - 2));
  }
  if (subset.empty()) throw AuthorizationError("the empty set is not authorized for s_" + num(j));
  const Track subset_ids = ids_of(subset, modulus);
  if (!subset_ids.is_subset_of(cfg.identities())) {
    throw ParameterError("subset " + subset_ids.to_string() + " contains non-participants");
  }
  const std::vector<Share> shares = sorted_by_id(subset);

  if (shares.size() >= t) {
    std::vector<Share> used(shares.begin(), shares.begin() + t);
    FieldElement value = recover_full(used, t, j, modulus);
    return {value, RecoveryRoute::kFullSolve, ids_of(used, modulus), std::nullopt};
  }

  const std::size_t r = shares.size();
  const std::uint64_t full = (std::uint64_t{1} << r);
  for (unsigned size = 1; size <= r; ++size) {
    std::optional<Track> best;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      if (std::popcount(mask) != static_cast<int>(size)) continue;
      Track sub = subset_ids.subtrack(mask);
      if ((!best || sub < *best) && privileged_rank_oracle(sub, t, j)) best = std::move(sub);
    }
    if (!best) continue;
    const std::vector<Share> picked = ShareTable(modulus, shares).select(best->values());
    auto result = recover_privileged(picked, t, j, modulus);
    return {result.value, RecoveryRoute::kPrivilegedFormula, *best, std::move(result.extension)};
  }
  throw AuthorizationError("subset " + subset_ids.to_string() + " is not authorized for s_" + num(j) +
                           " (j=" + num(j) + ")");
}

}  // namespace privcoal

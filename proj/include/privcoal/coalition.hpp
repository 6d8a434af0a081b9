#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "privcoal/field.hpp"
#include "privcoal/symfun.hpp"

namespace privcoal {

// Parameters of one enumeration: threshold t, secret index j, coalition
// length r, field order p and identity bound N (candidates are 1..N).
struct CoalitionQuery {
  unsigned t = 0;
  unsigned j = 0;
  unsigned r = 0;
  std::uint64_t p = 0;
  unsigned N = 0;

  // Throws ParameterError naming the first violated inequality.
  void validate() const;

  // The tau-index window {r-j, ..., t-1-j}.
  unsigned window_low() const { return r - j; }
  unsigned window_high() const { return t - 1 - j; }

  friend bool operator==(const CoalitionQuery&, const CoalitionQuery&) = default;
};

// Checks t >= 3, p prime, t <= p, 1 <= N <= p (everything except r).
// N = p admits the label p, which stands for the residue 0.
void validate_sweep_parameters(unsigned t, unsigned j, std::uint64_t p, unsigned N);

// Coalition lengths r admitted for (t, j): ceil((t+1)/2) <= r <= t-1 and
// t-r <= j <= r-1.
std::vector<unsigned> valid_lengths(unsigned t, unsigned j);

struct CoalitionReport {
  CoalitionQuery query;
  // Set when the report covers every valid length rather than a single r.
  bool all_lengths = false;
  bool minimal_only = false;
  std::vector<Track> coalitions;
  std::optional<unsigned> r_min;
  std::optional<std::size_t> N_min;

  std::size_t count() const { return coalitions.size(); }

  friend bool operator==(const CoalitionReport&, const CoalitionReport&) = default;
};

// Calls `visit` with every strictly increasing r-tuple over {1..N} in
// lexicographic order. Requires 1 <= r <= N <= p.
void for_each_track(unsigned r, unsigned N, PrimeModulus modulus,
                    const std::function<void(const Track&)>& visit);
// Same, restricted to tuples whose first element is `first`.
void for_each_track_with_first(unsigned r, unsigned N, unsigned first, PrimeModulus modulus,
                               const std::function<void(const Track&)>& visit);
std::vector<Track> enumerate_tracks(unsigned r, unsigned N, PrimeModulus modulus);

// tau_omega(L) == 0 for every omega in {r-j, ..., t-1-j} (clipped to
// [0, r]). For nonzero identities this is false for j = 0, j = t-1 and j
// outside [t-r, r-1]. Throws if r >= t, t > p or j >= t.
bool is_privileged(const Track& track, unsigned t, unsigned j);

// Linear-algebra definition: the unit vector e_j lies in the row space of
// the r x t power matrix A(L), i.e. the r shares pin down a_j.
bool privileged_rank_oracle(const Track& track, unsigned t, unsigned j);

// tau_{t-1-j}(L || u with u_m removed) == 0 for every m. `extension` must be
// disjoint from the track and have length t - r.
bool lemma2_condition(const Track& track, const Track& extension, unsigned t, unsigned j);

// Privileged, and no proper sub-track is accepted by the rank oracle.
bool is_minimal_privileged(const Track& track, unsigned t, unsigned j);

// A length-t track none of whose proper sub-tracks is privileged.
bool is_unextended(const Track& track, unsigned t, unsigned j);

// All privileged tracks of length q.r over {1..N}, sorted. `workers` > 1
// partitions the scan by first element; output is identical either way.
CoalitionReport privileged_coalitions(const CoalitionQuery& q, unsigned workers = 1);
CoalitionReport minimal_privileged_coalitions(const CoalitionQuery& q, unsigned workers = 1);

// Sweep over every valid length. `coalitions` holds all members ordered by
// (length, lexicographic); r_min is the shortest length with any privileged
// coalition and N_min the number of privileged coalitions at that length.
CoalitionReport minimal_privileged_sweep(unsigned t, unsigned j, std::uint64_t p, unsigned N,
                                         unsigned workers = 1);
// Privileged coalitions of the shortest length only (Table-3 style).
CoalitionReport shortest_privileged_coalitions(unsigned t, unsigned j, std::uint64_t p, unsigned N,
                                               unsigned workers = 1);

// Minimal-coalition counts of a sweep broken down by length.
std::map<unsigned, std::size_t> count_by_length(const CoalitionReport& report);

}  // namespace privcoal

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "privcoal/field.hpp"

namespace privcoal {

// Which integer labels a track accepts.
//  kNonzeroResidues: 1..p-1 (participant identities).
//  kUpToFieldOrder:  1..p, where the label p stands for the residue 0. Used
//                    when enumerating {1..N} with N = p.
enum class LabelRange { kNonzeroResidues, kUpToFieldOrder };

// A set of integer labels with pairwise distinct residues mod p, stored
// ascending. Participant identities and coalitions are both tracks.
class Track {
 public:
  // Sorts the input; throws ParameterError on labels outside the range,
  // duplicates or an empty list.
  Track(std::vector<std::uint64_t> labels, PrimeModulus modulus,
        LabelRange range = LabelRange::kNonzeroResidues);

  std::size_t size() const { return elements_.size(); }
  PrimeModulus modulus() const { return modulus_; }
  // Residues, in label order.
  std::span<const FieldElement> elements() const { return elements_; }
  const FieldElement& operator[](std::size_t i) const { return elements_[i]; }

  // Labels, ascending.
  const std::vector<std::uint64_t>& values() const { return labels_; }
  bool contains(std::uint64_t label) const;
  bool is_subset_of(const Track& other) const;
  bool disjoint_with(const Track& other) const;

  // Sub-track from the positions whose bits are set in `mask`.
  Track subtrack(std::uint64_t mask) const;
  // Track with position `index` removed; requires size() >= 2.
  Track without(std::size_t index) const;

  std::string to_string() const;

  friend bool operator==(const Track& a, const Track& b) { return a.labels_ == b.labels_; }
  // Lexicographic on the ascending label lists.
  friend bool operator<(const Track& a, const Track& b) { return a.labels_ < b.labels_; }

 private:
  Track(std::vector<std::uint64_t> labels, std::vector<FieldElement> elements, PrimeModulus modulus)
      : labels_(std::move(labels)), elements_(std::move(elements)), modulus_(modulus) {}

  std::vector<std::uint64_t> labels_;
  std::vector<FieldElement> elements_;
  PrimeModulus modulus_;
};

std::ostream& operator<<(std::ostream& os, const Track& track);

// Coefficients a_0..a_{t-1} in ascending powers.
class CoeffVector {
 public:
  explicit CoeffVector(std::vector<FieldElement> coefficients);
  CoeffVector(std::span<const std::uint64_t> values, PrimeModulus modulus);

  std::size_t size() const { return coefficients_.size(); }
  PrimeModulus modulus() const { return coefficients_.front().modulus(); }
  const FieldElement& operator[](std::size_t i) const { return coefficients_[i]; }
  std::span<const FieldElement> coefficients() const { return coefficients_; }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  std::vector<FieldElement> coefficients_;
};

// tau_0 .. tau_r of the points: coefficient ladder of prod (x + l_i),
// read from the top power down.
std::vector<FieldElement> elem_sym_all(std::span<const FieldElement> points, PrimeModulus modulus);
std::vector<FieldElement> elem_sym_all(const Track& track);

// tau_omega, with tau_0 = 1 and tau_omega = 0 for omega > r.
FieldElement elem_sym(std::span<const FieldElement> points, std::size_t omega, PrimeModulus modulus);
FieldElement elem_sym(const Track& track, std::size_t omega);

// Horner evaluation.
FieldElement poly_eval(const CoeffVector& a, const FieldElement& x);

// prod_{i<j} (x_j - x_i) in the given order.
FieldElement vandermonde_det(std::span<const FieldElement> points, PrimeModulus modulus);
FieldElement vandermonde_det(const Track& track);

// det(x_mu ^ c_nu) by Gaussian elimination. Exponents must be strictly
// increasing and match the point count.
FieldElement generalized_vandermonde_det(std::span<const FieldElement> points,
                                         std::span<const std::uint64_t> exponents);
FieldElement generalized_vandermonde_det(const Track& track,
                                         std::span<const std::uint64_t> exponents);

}  // namespace privcoal

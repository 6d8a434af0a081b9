#include "privcoal/symfun.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "privcoal/linalg.hpp"

namespace privcoal {

Track::Track(std::vector<std::uint64_t> labels, PrimeModulus modulus, LabelRange range)
    : modulus_(modulus) {
  if (labels.empty()) throw ParameterError("a track needs at least one element");
  std::sort(labels.begin(), labels.end());
  const std::uint64_t p = modulus.value();
  const std::uint64_t highest = range == LabelRange::kUpToFieldOrder ? p : p - 1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::uint64_t v = labels[i];
    if (v == 0) throw ParameterError("track elements must be nonzero");
    if (v > highest) {
      throw ParameterError("track element " + std::to_string(v) + " is not a nonzero residue mod " +
                           std::to_string(p));
    }
    if (i > 0 && labels[i - 1] == v) {
      throw ParameterError("track element " + std::to_string(v) + " is repeated");
    }
    elements_.emplace_back(v, modulus);
  }
  labels_ = std::move(labels);
}

bool Track::contains(std::uint64_t label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool Track::is_subset_of(const Track& other) const {
  return std::all_of(labels_.begin(), labels_.end(), [&](std::uint64_t v) { return other.contains(v); });
}

bool Track::disjoint_with(const Track& other) const {
  // Compare residues so that a label p never coexists with a residue-0 label.
  for (const auto& e : elements_) {
    for (const auto& f : other.elements_) {
      if (e == f) return false;
    }
  }
  return true;
}

Track Track::subtrack(std::uint64_t mask) const {
  std::vector<std::uint64_t> labels;
  std::vector<FieldElement> picked;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (mask >> i & 1U) {
      labels.push_back(labels_[i]);
      picked.push_back(elements_[i]);
    }
  }
  if (picked.empty()) throw ParameterError("empty sub-track");
  return Track(std::move(labels), std::move(picked), modulus_);
}

Track Track::without(std::size_t index) const {
  if (elements_.size() < 2 || index >= elements_.size()) {
    throw ParameterError("cannot remove position " + std::to_string(index) + " from a track of length " +
                         std::to_string(elements_.size()));
  }
  const std::uint64_t all = (std::uint64_t{1} << elements_.size()) - 1;
  return subtrack(all & ~(std::uint64_t{1} << index));
}

std::string Track::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Track& track) {
  os << '(';
  for (std::size_t i = 0; i < track.size(); ++i) {
    if (i) os << ',';
    os << track.values()[i];
  }
  return os << ')';
}

CoeffVector::CoeffVector(std::vector<FieldElement> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw ParameterError("empty coefficient vector");
  for (const auto& c : coefficients_) {
    if (c.modulus() != coefficients_.front().modulus()) {
      throw ParameterError("coefficients over different moduli");
    }
  }
}

CoeffVector::CoeffVector(std::span<const std::uint64_t> values, PrimeModulus modulus) {
  if (values.empty()) throw ParameterError("empty coefficient vector");
  for (std::uint64_t v : values) coefficients_.emplace_back(v, modulus);
}

std::vector<FieldElement> elem_sym_all(std::span<const FieldElement> points, PrimeModulus modulus) {
  // ladder[k] is the coefficient of x^(len-k) in prod (x + l_i), i.e. tau_k.
  std::vector<FieldElement> ladder{FieldElement::one(modulus)};
  ladder.reserve(points.size() + 1);
  for (const auto& l : points) {
    ladder.push_back(FieldElement::zero(modulus));
    for (std::size_t k = ladder.size() - 1; k > 0; --k) ladder[k] += ladder[k - 1] * l;
  }
  return ladder;
}

std::vector<FieldElement> elem_sym_all(const Track& track) {
  return elem_sym_all(track.elements(), track.modulus());
}

FieldElement elem_sym(std::span<const FieldElement> points, std::size_t omega, PrimeModulus modulus) {
  if (omega > points.size()) return FieldElement::zero(modulus);
  return elem_sym_all(points, modulus)[omega];
}

FieldElement elem_sym(const Track& track, std::size_t omega) {
  return elem_sym(track.elements(), omega, track.modulus());
}

FieldElement poly_eval(const CoeffVector& a, const FieldElement& x) {
  FieldElement acc = FieldElement::zero(a.modulus());
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

FieldElement vandermonde_det(std::span<const FieldElement> points, PrimeModulus modulus) {
  FieldElement det = FieldElement::one(modulus);
  for (std::size_t j = 1; j < points.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) det *= points[j] - points[i];
  }
  return det;
}

FieldElement vandermonde_det(const Track& track) {
  return vandermonde_det(track.elements(), track.modulus());
}

FieldElement generalized_vandermonde_det(std::span<const FieldElement> points,
                                         std::span<const std::uint64_t> exponents) {
  if (points.size() != exponents.size()) {
    throw ParameterError("generalized Vandermonde: " + std::to_string(points.size()) + " points but " +
                         std::to_string(exponents.size()) + " exponents");
  }
  if (points.empty()) throw ParameterError("generalized Vandermonde of an empty point set");
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (exponents[i] <= exponents[i - 1]) {
      throw ParameterError("generalized Vandermonde exponents must be strictly increasing");
    }
  }
  return Matrix::power_matrix(points, exponents).determinant();
}

FieldElement generalized_vandermonde_det(const Track& track,
                                         std::span<const std::uint64_t> exponents) {
  return generalized_vandermonde_det(track.elements(), exponents);
}

}  // namespace privcoal

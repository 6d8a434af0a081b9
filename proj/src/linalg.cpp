#include "privcoal/linalg.hpp"

#include <string>
#include <utility>

namespace privcoal {

namespace {

struct Echelon {
  std::size_t rank = 0;
  // Product of pivots times the permutation sign; meaningful for square input.
  std::uint64_t det = 1;
};

// In-place forward elimination over the first `elim_cols` columns of a
// rows x cols buffer. Columns beyond elim_cols (an augmented block) are
// transformed alongside.
Echelon forward_eliminate(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                          std::size_t elim_cols, std::uint64_t p) {
  Echelon out;
  bool negate = false;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < elim_cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && a[found * cols + c] == 0) ++found;
    if (found == rows) {
      out.det = 0;
      continue;
    }
    if (found != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) {
        std::swap(a[found * cols + k], a[pivot_row * cols + k]);
      }
      negate = !negate;
    }
    const std::uint64_t pivot = a[pivot_row * cols + c];
    out.det = detail::mul_mod(out.det, pivot, p);
    const std::uint64_t inv = detail::pow_mod(pivot, p - 2, p);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      const std::uint64_t v = a[r * cols + c];
      if (v == 0) continue;
      const std::uint64_t factor = detail::mul_mod(v, inv, p);
      for (std::size_t k = c; k < cols; ++k) {
        a[r * cols + k] =
            detail::sub_mod(a[r * cols + k], detail::mul_mod(factor, a[pivot_row * cols + k], p), p);
      }
    }
    ++pivot_row;
  }
  out.rank = pivot_row;
  if (out.rank < elim_cols) out.det = 0;
  if (negate && out.det != 0) out.det = p - out.det;
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeModulus modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}

Matrix Matrix::power_matrix(std::span<const FieldElement> points, std::size_t cols) {
  if (points.empty()) throw ParameterError("power matrix needs at least one point");
  Matrix m(points.size(), cols, points.front().modulus());
  for (std::size_t r = 0; r < points.size(); ++r) {
    FieldElement power = FieldElement::one(m.modulus_);
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, power);
      power *= points[r];
    }
  }
  return m;
}

Matrix Matrix::power_matrix(std::span<const FieldElement> points,
                            std::span<const std::uint64_t> exponents) {
  if (points.empty()) throw ParameterError("power matrix needs at least one point");
  Matrix m(points.size(), exponents.size(), points.front().modulus());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c = 0; c < exponents.size(); ++c) {
      m.set(r, c, points[r].pow(exponents[c]));
    }
  }
  return m;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
  return {raw(r, c), modulus_};
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
  if (v.modulus() != modulus_) throw ParameterError("matrix entry over a different modulus");
  raw(r, c) = v.value();
}

void Matrix::append_row(std::span<const FieldElement> row) {
  if (row.size() != cols_) {
    throw ParameterError("row has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(cols_));
  }
  data_.resize((rows_ + 1) * cols_);
  ++rows_;
  for (std::size_t c = 0; c < cols_; ++c) set(rows_ - 1, c, row[c]);
}

std::size_t Matrix::rank() const {
  std::vector<std::uint64_t> a = data_;
  return forward_eliminate(a, rows_, cols_, cols_, modulus_.value()).rank;
}

FieldElement Matrix::determinant() const {
  if (rows_ != cols_) throw ParameterError("determinant of a non-square matrix");
  std::vector<std::uint64_t> a = data_;
  return {forward_eliminate(a, rows_, cols_, cols_, modulus_.value()).det, modulus_};
}

std::optional<std::vector<FieldElement>> Matrix::solve(std::span<const FieldElement> rhs) const {
  if (rows_ != cols_) throw ParameterError("solve needs a square matrix");
  if (rhs.size() != rows_) throw ParameterError("right-hand side length mismatch");
  const std::uint64_t p = modulus_.value();
  const std::size_t width = cols_ + 1;
  std::vector<std::uint64_t> a(rows_ * width);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) a[r * width + c] = raw(r, c);
    if (rhs[r].modulus() != modulus_) throw ParameterError("right-hand side over a different modulus");
    a[r * width + cols_] = rhs[r].value();
  }
  if (forward_eliminate(a, rows_, width, cols_, p).rank < cols_) return std::nullopt;

  std::vector<FieldElement> x(cols_, FieldElement::zero(modulus_));
  for (std::size_t i = cols_; i-- > 0;) {
    std::uint64_t acc = a[i * width + cols_];
    for (std::size_t k = i + 1; k < cols_; ++k) {
      acc = detail::sub_mod(acc, detail::mul_mod(a[i * width + k], x[k].value(), p), p);
    }
    const std::uint64_t inv = detail::pow_mod(a[i * width + i], p - 2, p);
    x[i] = FieldElement(detail::mul_mod(acc, inv, p), modulus_);
  }
  return x;
}

bool Matrix::row_space_contains(std::span<const FieldElement> v) const {
  Matrix augmented = *this;
  augmented.append_row(v);
  return augmented.rank() == rank();
}

}  // namespace privcoal

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "privcoal/field.hpp"

namespace privcoal {

// Dense row-major matrix over F_p, used for the Vandermonde systems behind
// share generation, recovery and the rank oracle.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, PrimeModulus modulus);

  // Rows are the given points, columns are powers 0..cols-1.
  static Matrix power_matrix(std::span<const FieldElement> points, std::size_t cols);
  // Entry (mu, nu) = points[mu] ^ exponents[nu].
  static Matrix power_matrix(std::span<const FieldElement> points,
                             std::span<const std::uint64_t> exponents);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  PrimeModulus modulus() const { return modulus_; }

  FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& v);

  void append_row(std::span<const FieldElement> row);

  std::size_t rank() const;
  // Square matrices only.
  FieldElement determinant() const;
  // Unique solution of M x = rhs, or nullopt when M is singular.
  std::optional<std::vector<FieldElement>> solve(std::span<const FieldElement> rhs) const;
  // True iff v is a linear combination of the rows.
  bool row_space_contains(std::span<const FieldElement> v) const;

 private:
  std::uint64_t& raw(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t raw(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows_;
  std::size_t cols_;
  PrimeModulus modulus_;
  std::vector<std::uint64_t> data_;
};

}  // namespace privcoal

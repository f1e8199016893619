#pragma once

// Lattice linear algebra: Hermite normal form, integer kernels and
// saturation, plus the small amount of exact Gaussian elimination the
// geometry code needs.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "finepoly/exact.hpp"

namespace finepoly {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LatticeVector row(std::size_t r) const;
  std::vector<LatticeVector> row_vectors() const;
  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteResult {
  IntegerMatrix h;  ///< row Hermite normal form
  IntegerMatrix u;  ///< unimodular, h = u * m
};

/// Row-style HNF: nonzero rows first, positive pivots strictly increasing in
/// column, entries above a pivot reduced into [0, pivot).
HermiteResult hnf(const IntegerMatrix& m);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(const IntegerMatrix& m);

/// Z-basis (HNF-reduced rows) of { y in Z^n : <row_i, y> = 0 for all rows }.
std::vector<LatticeVector> integer_kernel(std::span<const LatticeVector> rows, std::size_t n);

/// Z-basis of span_Q(vectors) ∩ Z^n, in HNF. Empty for the zero span.
std::vector<LatticeVector> saturate(std::span<const LatticeVector> vectors, std::size_t n);

/// Nonzero rows of the HNF of the lattice generated by the vectors.
std::vector<LatticeVector> lattice_basis(std::span<const LatticeVector> vectors, std::size_t n);

struct RowEchelon {
  std::vector<RationalVector> rows;  ///< reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;
};

RowEchelon rref(std::span<const RationalVector> rows, std::size_t n);
std::size_t rank(std::span<const RationalVector> rows, std::size_t n);
std::size_t rank(std::span<const LatticeVector> rows, std::size_t n);

/// Rational basis of { y : <row_i, y> = 0 }, one vector per free column.
std::vector<RationalVector> nullspace(std::span<const RationalVector> rows, std::size_t n);

/// Solves the square system a x = b; throws InputError if a is singular.
RationalVector solve(std::span<const RationalVector> a, const RationalVector& b);

}  // namespace finepoly

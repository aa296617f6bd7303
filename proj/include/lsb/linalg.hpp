#pragma once

// Exact linear algebra over Q backed by fraction-free (Bareiss) elimination.

#include <vector>

#include "lsb/superscalar.hpp"

namespace lsb {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix with an explicit column count, so that
/// matrices without rows still know their width.
struct RationalMatrix {
  std::size_t cols = 0;
  std::vector<RationalVector> rows;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(std::vector<RationalVector> rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t row_count() const { return rows.size(); }
  RationalVector multiply(const RationalVector& v) const;
};

/// Row echelon form computed over Z after clearing denominators row by row.
struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // nonzero echelon rows
  std::vector<std::size_t> pivots;           // pivot column of each row
  std::size_t cols = 0;
  std::size_t rank() const { return pivots.size(); }
};

Echelon bareiss_echelon(const RationalMatrix& M);
std::size_t rank(const RationalMatrix& M);

/// Basis of {v : M v = 0}, one vector per free column, each scaled to a
/// primitive integer vector with a positive entry at its free column.
std::vector<RationalVector> nullspace(const RationalMatrix& M);

/// Whether v lies in the span of `vectors`.
bool in_span(const std::vector<RationalVector>& vectors, const RationalVector& v);

/// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<RationalVector>& vectors);

}  // namespace lsb

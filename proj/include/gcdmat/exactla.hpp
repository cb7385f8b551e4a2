#pragma once

// Exact linear algebra over unbounded integers.

#include <cstddef>
#include <optional>

#include "gcdmat/int_matrix.hpp"

namespace gcdmat {

inline constexpr std::size_t kDefaultDeterminantCap = 200;
inline constexpr std::size_t kCofactorMaxN = 8;

// Throws std::invalid_argument if a.cols() != b.rows().
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

IntMatrix transpose(const IntMatrix& a);

// Fraction-free (Bareiss) elimination with row swaps.  Every intermediate is
// an exact integer.  Throws std::invalid_argument for non-square input.
Integer det_bareiss(IntMatrix a);

// Laplace expansion along the first row; the reference for det_bareiss.
// Requires a square matrix with at most kCofactorMaxN rows.
Integer det_cofactor(const IntMatrix& a);

// Rank over Q via fraction-free row echelon form.
std::size_t rank_ff(IntMatrix a);

struct EntryMismatch {
  std::size_t i;
  std::size_t j;
  Integer expected;
  Integer actual;
};

// First row-major position where the two matrices differ.  Throws
// std::invalid_argument if the shapes differ.
std::optional<EntryMismatch> first_mismatch(const IntMatrix& expected,
                                            const IntMatrix& actual);

// left * diag * right, exploiting the diagonal middle factor.
IntMatrix product(const Factorization& f);

}  // namespace gcdmat

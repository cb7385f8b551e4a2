#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcdmat/integer.hpp"

namespace gcdmat {

// Dense matrix of exact integers with 1-indexed (i, j) access.
class IntMatrix {
 public:
  // Zero matrix.  Both dimensions must be positive.
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  // Rows must be non-empty and of equal length.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[(i - 1) * cols_ + (j - 1)];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[(i - 1) * cols_ + (j - 1)];
  }

  bool is_diagonal() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;  // row-major
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Row-major CSV: one line per row, comma-separated base-10 entries, no header.
std::string to_csv(const IntMatrix& m);
IntMatrix from_csv(const std::string& text);

// Bare tabular body, no preamble.
std::string to_latex(const IntMatrix& m);

// A claimed identity  claimed_product == left * diag * right.
// `right` is stored already transposed, e.g. D_n^T for Theorem 1.
class Factorization {
 public:
  Factorization(IntMatrix left, IntMatrix diag, IntMatrix right,
                IntMatrix claimed_product);

  const IntMatrix& left() const { return left_; }
  const IntMatrix& diag() const { return diag_; }
  const IntMatrix& right() const { return right_; }
  const IntMatrix& claimed_product() const { return claimed_product_; }
  std::size_t size() const { return left_.rows(); }

 private:
  IntMatrix left_;
  IntMatrix diag_;
  IntMatrix right_;
  IntMatrix claimed_product_;
};

}  // namespace gcdmat

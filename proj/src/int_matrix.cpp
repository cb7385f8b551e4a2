#include "gcdmat/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gcdmat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("from_rows: empty matrix");
  }
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw std::invalid_argument("from_rows: ragged row " +
                                  std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) m(i + 1, j + 1) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t j = 1; j <= cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    os << (i == 1 ? "[" : ", [");
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

std::string to_csv(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) out += ',';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

IntMatrix from_csv(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Integer> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      Integer v;
      if (v.set_str(cell, 10) != 0) {
        throw std::invalid_argument("from_csv: bad entry '" + cell + "'");
      }
      row.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

std::string to_latex(const IntMatrix& m) {
  std::string out = "\\begin{tabular}{" + std::string(m.cols(), 'r') + "}\n";
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) out += " & ";
      out += m(i, j).get_str();
    }
    out += " \\\\\n";
  }
  out += "\\end{tabular}\n";
  return out;
}

Factorization::Factorization(IntMatrix left, IntMatrix diag, IntMatrix right,
                             IntMatrix claimed_product)
    : left_(std::move(left)),
      diag_(std::move(diag)),
      right_(std::move(right)),
      claimed_product_(std::move(claimed_product)) {
  const std::size_t n = left_.rows();
  for (const IntMatrix* m : {&left_, &diag_, &right_, &claimed_product_}) {
    if (m->rows() != n || m->cols() != n) {
      throw std::invalid_argument("factorization factors must all be " +
                                  std::to_string(n) + "x" +
                                  std::to_string(n));
    }
  }
  if (!diag_.is_diagonal()) {
    throw std::invalid_argument("factorization middle factor is not diagonal");
  }
}

}  // namespace gcdmat

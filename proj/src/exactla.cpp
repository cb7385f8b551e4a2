#include "gcdmat/exactla.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcdmat {

namespace {

void require_square(const IntMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw std::invalid_argument(std::string(op) + ": matrix is " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ", not square");
  }
}

void swap_rows(IntMatrix& a, std::size_t p, std::size_t q) {
  for (std::size_t j = 1; j <= a.cols(); ++j) swap(a(p, j), a(q, j));
}

// One fraction-free elimination step below pivot (r, c):
//   a(i,j) <- (a(r,c) a(i,j) - a(i,c) a(r,j)) / prev   for i > r, j > c.
// The division is exact: each updated entry is a minor of the input.
void eliminate_below(IntMatrix& a, std::size_t r, std::size_t c,
                     const Integer& prev) {
  Integer t;
  for (std::size_t i = r + 1; i <= a.rows(); ++i) {
    for (std::size_t j = c + 1; j <= a.cols(); ++j) {
      t = a(r, c) * a(i, j);
      t -= a(i, c) * a(r, j);
      mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
    }
    a(i, c) = 0;
  }
}

Integer cofactor_expand(const IntMatrix& a, std::size_t row,
                        std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return a(row, cols[0]);
  Integer det = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t col = cols[k];
    if (a(row, col) == 0) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Integer minor = cofactor_expand(a, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 0) {
      det += a(row, col) * minor;
    } else {
      det -= a(row, col) * minor;
    }
  }
  return det;
}

// Bit length of the largest |entry|, or -1 if some entry does not fit a long.
int max_bits(const IntMatrix& a) {
  std::size_t bits = 0;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (!a(i, j).fits_slong_p()) return -1;
      bits = std::max(bits, mpz_sizeinbase(a(i, j).get_mpz_t(), 2));
    }
  }
  return static_cast<int>(bits);
}

int bit_width(std::size_t k) {
  int bits = 0;
  while (k != 0) {
    ++bits;
    k >>= 1;
  }
  return bits;
}

Integer from_int128(__int128 v) {
  if (v >= LONG_MIN && v <= LONG_MAX) return Integer(static_cast<long>(v));
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(mag >> 64));
  Integer r = hi << 64;
  r += static_cast<unsigned long>(mag & ~std::uint64_t{0});
  return negative ? Integer(-r) : r;
}

// Same product accumulated in __int128; valid when every partial sum fits.
IntMatrix mat_mul_small(const IntMatrix& a, const IntMatrix& b) {
  std::vector<long> bv(b.rows() * b.cols());
  for (std::size_t k = 1; k <= b.rows(); ++k) {
    for (std::size_t j = 1; j <= b.cols(); ++j) {
      bv[(k - 1) * b.cols() + (j - 1)] = b(k, j).get_si();
    }
  }
  IntMatrix c(a.rows(), b.cols());
  std::vector<__int128> acc(b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 1; k <= a.cols(); ++k) {
      const long aik = a(i, k).get_si();
      if (aik == 0) continue;
      const long* row = &bv[(k - 1) * b.cols()];
      for (std::size_t j = 0; j < b.cols(); ++j) {
        acc[j] += static_cast<__int128>(aik) * row[j];
      }
    }
    for (std::size_t j = 1; j <= b.cols(); ++j) c(i, j) = from_int128(acc[j - 1]);
  }
  return c;
}

}  // namespace

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument(
        "mat_mul: dimension mismatch (" + std::to_string(a.rows()) + "x" +
        std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
        std::to_string(b.cols()) + ")");
  }
  const int a_bits = max_bits(a);
  const int b_bits = max_bits(b);
  if (a_bits >= 0 && b_bits >= 0 &&
      a_bits + b_bits + bit_width(a.cols()) <= 126) {
    return mat_mul_small(a, b);
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t k = 1; k <= a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 1; j <= b.cols(); ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Integer det_bareiss(IntMatrix a) {
  require_square(a, "det_bareiss");
  const std::size_t n = a.rows();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p <= n && a(p, k) == 0) ++p;
      if (p > n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    eliminate_below(a, k, k, prev);
    prev = a(k, k);
  }
  return sign * a(n, n);
}

Integer det_cofactor(const IntMatrix& a) {
  require_square(a, "det_cofactor");
  if (a.rows() > kCofactorMaxN) {
    throw std::invalid_argument("det_cofactor: n = " +
                                std::to_string(a.rows()) +
                                " exceeds the oracle limit of " +
                                std::to_string(kCofactorMaxN));
  }
  std::vector<std::size_t> cols(a.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j + 1;
  return cofactor_expand(a, 1, cols);
}

std::size_t rank_ff(IntMatrix a) {
  std::size_t r = 1;
  Integer prev = 1;
  for (std::size_t c = 1; c <= a.cols() && r <= a.rows(); ++c) {
    std::size_t p = r;
    while (p <= a.rows() && a(p, c) == 0) ++p;
    if (p > a.rows()) continue;
    if (p != r) swap_rows(a, r, p);
    eliminate_below(a, r, c, prev);
    prev = a(r, c);
    ++r;
  }
  return r - 1;
}

std::optional<EntryMismatch> first_mismatch(const IntMatrix& expected,
                                            const IntMatrix& actual) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    throw std::invalid_argument("first_mismatch: shapes differ");
  }
  for (std::size_t i = 1; i <= expected.rows(); ++i) {
    for (std::size_t j = 1; j <= expected.cols(); ++j) {
      if (expected(i, j) != actual(i, j)) {
        return EntryMismatch{i, j, expected(i, j), actual(i, j)};
      }
    }
  }
  return std::nullopt;
}

IntMatrix product(const Factorization& f) {
  IntMatrix scaled = f.left();
  for (std::size_t i = 1; i <= scaled.rows(); ++i) {
    for (std::size_t k = 1; k <= scaled.cols(); ++k) {
      if (scaled(i, k) != 0) scaled(i, k) *= f.diag()(k, k);
    }
  }
  return mat_mul(scaled, f.right());
}

}  // namespace gcdmat

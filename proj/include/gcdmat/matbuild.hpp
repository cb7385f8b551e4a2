#pragma once

// Builders for the GCD-type matrices and the triangular / indicator factors
// that decompose them.  The size of every matrix is the length of the input
// table.

#include <cstddef>

#include "gcdmat/arithfun.hpp"
#include "gcdmat/int_matrix.hpp"

namespace gcdmat {

inline constexpr std::size_t kDefaultMatrixCap = 500;

enum class Indicator {
  kC,       // 1 iff j | i
  kD,       // 1 iff j does not divide i
  kDPrime,  // D with entry (1,1) set to 1
};

enum class Theorem {
  kT1,  // S(i) - S((i,j))                   = C  diag(g) D^T
  kT2,  // T - S(i) - S(j) + S((i,j))        = D  diag(g) D^T
  kT3,  // T2 matrix + g(1) at (1,1)         = D' diag(g) D'^T
};

// A directly evaluated matrix together with the factorization that is claimed
// to reproduce it (factorization.claimed_product() == direct).
struct GcdIdentity {
  IntMatrix direct;
  Factorization factorization;
};

IntMatrix build_indicator(Indicator kind, std::size_t n);

IntMatrix build_diag(const FunctionTable& g);

// g_ij = g(j) if j | i, else 0.
IntMatrix build_G(const FunctionTable& g);

// a_ij = f((i,j)).
IntMatrix build_classic_gcd(const FunctionTable& f);

GcdIdentity build_theorem(Theorem t, const FunctionTable& g);

// a_ij = h(i) - h((i,j)), factored as C diag(mu * h) D^T.
GcdIdentity build_hform(const FunctionTable& h);

// The third theorem's matrix with g(1) added on the whole first row and
// column ("i = 1 or j = 1").  This does not equal D' diag(g) D'^T in general;
// it is kept so the discrepancy can be reported.
IntMatrix build_theorem3_literal(const FunctionTable& g);

}  // namespace gcdmat

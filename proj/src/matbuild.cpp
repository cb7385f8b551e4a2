#include "gcdmat/matbuild.hpp"

#include <stdexcept>
#include <utility>

#include "gcdmat/exactla.hpp"

namespace gcdmat {

namespace {

long long gcd_of(std::size_t i, std::size_t j) {
  return gcd(static_cast<long long>(i), static_cast<long long>(j));
}

// Entry (i,j) = T - S(i) - S(j) + S((i,j)), T = g(1) + ... + g(n).
IntMatrix theorem2_direct(const FunctionTable& g, const FunctionTable& s) {
  const std::size_t n = g.size();
  Integer total = 0;
  for (const Integer& v : g.values()) total += v;
  IntMatrix a(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      a(i, j) = total - s(i) - s(j) + s(gcd_of(i, j));
    }
  }
  return a;
}

}  // namespace

IntMatrix build_indicator(Indicator kind, std::size_t n) {
  IntMatrix m(n, n);  // rejects n == 0
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const bool divides = i % j == 0;
      m(i, j) = (kind == Indicator::kC) == divides ? 1 : 0;
    }
  }
  if (kind == Indicator::kDPrime) m(1, 1) = 1;
  return m;
}

IntMatrix build_diag(const FunctionTable& g) {
  IntMatrix m(g.size(), g.size());
  for (std::size_t k = 1; k <= g.size(); ++k) m(k, k) = g(k);
  return m;
}

IntMatrix build_G(const FunctionTable& g) {
  const std::size_t n = g.size();
  IntMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      if (i % j == 0) m(i, j) = g(j);
    }
  }
  return m;
}

IntMatrix build_classic_gcd(const FunctionTable& f) {
  const std::size_t n = f.size();
  IntMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) m(i, j) = f(gcd_of(i, j));
  }
  return m;
}

GcdIdentity build_theorem(Theorem t, const FunctionTable& g) {
  const std::size_t n = g.size();
  const FunctionTable s = summatory(g);
  switch (t) {
    case Theorem::kT1: {
      IntMatrix a(n, n);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) a(i, j) = s(i) - s(gcd_of(i, j));
      }
      Factorization f(build_indicator(Indicator::kC, n), build_diag(g),
                      transpose(build_indicator(Indicator::kD, n)), a);
      return {std::move(a), std::move(f)};
    }
    case Theorem::kT2: {
      IntMatrix a = theorem2_direct(g, s);
      const IntMatrix d = build_indicator(Indicator::kD, n);
      Factorization f(d, build_diag(g), transpose(d), a);
      return {std::move(a), std::move(f)};
    }
    case Theorem::kT3: {
      // Only (1,1) picks up g(1): row 1 of D' meets row j > 1 of D' in
      // column 1 exactly when j = 1.
      IntMatrix a = theorem2_direct(g, s);
      a(1, 1) += g(1);
      const IntMatrix d = build_indicator(Indicator::kDPrime, n);
      Factorization f(d, build_diag(g), transpose(d), a);
      return {std::move(a), std::move(f)};
    }
  }
  throw std::logic_error("unhandled theorem");
}

GcdIdentity build_hform(const FunctionTable& h) {
  const std::size_t n = h.size();
  IntMatrix a(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) a(i, j) = h(i) - h(gcd_of(i, j));
  }
  Factorization f(build_indicator(Indicator::kC, n),
                  build_diag(mobius_invert(h)),
                  transpose(build_indicator(Indicator::kD, n)), a);
  return {std::move(a), std::move(f)};
}

IntMatrix build_theorem3_literal(const FunctionTable& g) {
  IntMatrix a = theorem2_direct(g, summatory(g));
  for (std::size_t k = 1; k <= g.size(); ++k) {
    a(1, k) += g(1);
    if (k > 1) a(k, 1) += g(1);
  }
  return a;
}

}  // namespace gcdmat

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "gcdmat/exactla.hpp"
#include "gcdmat/matbuild.hpp"
#include "oracles.hpp"

namespace gcdmat {
namespace {

IntMatrix rows(const std::vector<std::vector<Integer>>& r) {
  return IntMatrix::from_rows(r);
}

FunctionTable table(std::initializer_list<long> xs) {
  return FunctionTable(oracle::ints(xs));
}

std::vector<FunctionTable> builtins(std::size_t n) {
  std::vector<FunctionTable> out;
  for (auto name : {"phi", "tau", "sigma", "mu", "one", "id"}) {
    out.push_back(tabulate(name, n));
  }
  return out;
}

TEST(Indicator, Examples) {
  // 2 does not divide 3, so c_32 = 0.
  EXPECT_EQ(build_indicator(Indicator::kC, 3),
            rows({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(build_indicator(Indicator::kD, 3),
            rows({{0, 1, 1}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(build_indicator(Indicator::kDPrime, 3),
            rows({{1, 1, 1}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_THROW(build_indicator(Indicator::kC, 0), std::invalid_argument);
}

TEST(Indicator, MatchesDivisibilityScan) {
  const IntMatrix c = build_indicator(Indicator::kC, 30);
  for (std::size_t i = 1; i <= 30; ++i) {
    for (std::size_t j = 1; j <= 30; ++j) {
      ASSERT_EQ(c(i, j), static_cast<long>(oracle::gcd(i, j) == long(j)));
    }
  }
}

TEST(Indicator, CAndDPartitionTheAllOnesMatrix) {
  for (std::size_t n = 1; n <= 200; n += (n < 20 ? 1 : 29)) {
    const IntMatrix c = build_indicator(Indicator::kC, n);
    const IntMatrix d = build_indicator(Indicator::kD, n);
    const IntMatrix dp = build_indicator(Indicator::kDPrime, n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        ASSERT_EQ(c(i, j) + d(i, j), 1) << n << ": " << i << "," << j;
        if (i * j != 1) ASSERT_EQ(dp(i, j), d(i, j));
      }
    }
    EXPECT_EQ(dp(1, 1), 1);
  }
}

TEST(Indicator, CIsUnitLowerTriangular) {
  for (std::size_t n : {1, 2, 7, 50}) {
    const IntMatrix c = build_indicator(Indicator::kC, n);
    for (std::size_t i = 1; i <= n; ++i) {
      EXPECT_EQ(c(i, i), 1);
      for (std::size_t j = i + 1; j <= n; ++j) ASSERT_EQ(c(i, j), 0);
    }
    EXPECT_EQ(det_bareiss(c), 1);
  }
}

TEST(BuildDiag, Examples) {
  EXPECT_EQ(build_diag(tabulate("phi", 3)),
            rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_EQ(build_diag(tabulate("one", 2)), IntMatrix::identity(2));
  EXPECT_EQ(build_diag(tabulate("id", 3)),
            rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
}

TEST(BuildG, Examples) {
  EXPECT_EQ(build_G(tabulate("phi", 3)),
            rows({{1, 0, 0}, {1, 1, 0}, {1, 0, 2}}));
  EXPECT_EQ(build_G(tabulate("one", 3)), build_indicator(Indicator::kC, 3));
  EXPECT_EQ(build_G(tabulate("id", 2)), rows({{1, 0}, {1, 2}}));
}

TEST(BuildG, EqualsCTimesDiag) {
  std::mt19937_64 rng(21);
  for (std::size_t n : {1, 2, 5, 13, 40, 100}) {
    auto tables = builtins(n);
    tables.push_back(oracle::random_table(rng, n));
    for (const FunctionTable& g : tables) {
      EXPECT_EQ(build_G(g), oracle::multiply(build_indicator(Indicator::kC, n),
                                             build_diag(g)))
          << g.name() << " n=" << n;
    }
  }
}

TEST(ClassicGcd, Examples) {
  EXPECT_EQ(build_classic_gcd(tabulate("id", 3)),
            rows({{1, 1, 1}, {1, 2, 1}, {1, 1, 3}}));
  EXPECT_EQ(build_classic_gcd(tabulate("id", 1)), rows({{1}}));
  EXPECT_EQ(build_classic_gcd(tabulate("tau", 4))(2, 4), oracle::tau(2));
  EXPECT_EQ(build_classic_gcd(tabulate("tau", 4))(2, 4), 2);
}

TEST(ClassicGcd, CarlitzFactorization) {
  std::mt19937_64 rng(22);
  for (std::size_t n : {1, 2, 3, 9, 24, 60, 100}) {
    auto tables = builtins(n);
    tables.push_back(oracle::random_table(rng, n));
    const IntMatrix c = build_indicator(Indicator::kC, n);
    for (const FunctionTable& g : tables) {
      EXPECT_EQ(build_classic_gcd(summatory(g)),
                oracle::multiply(oracle::multiply(c, build_diag(g)),
                                 transpose(c)))
          << g.name() << " n=" << n;
    }
  }
}

TEST(BuildTheorem, T1Examples) {
  const GcdIdentity phi = build_theorem(Theorem::kT1, tabulate("phi", 3));
  EXPECT_EQ(phi.direct, rows({{0, 0, 0}, {1, 0, 1}, {2, 2, 0}}));
  EXPECT_EQ(phi.factorization.claimed_product(), phi.direct);
  EXPECT_EQ(phi.factorization.left(), build_indicator(Indicator::kC, 3));
  EXPECT_EQ(phi.factorization.right(),
            transpose(build_indicator(Indicator::kD, 3)));

  EXPECT_EQ(build_theorem(Theorem::kT1, tabulate("mu", 3)).direct(2, 3), -1);
  EXPECT_EQ(build_theorem(Theorem::kT1, tabulate("mu", 4)).direct(2, 4), 0);
}

TEST(BuildTheorem, T1ParticularCases) {
  const std::size_t n = 30;
  const IntMatrix phi = build_theorem(Theorem::kT1, tabulate("phi", n)).direct;
  const IntMatrix one = build_theorem(Theorem::kT1, tabulate("one", n)).direct;
  const IntMatrix mu = build_theorem(Theorem::kT1, tabulate("mu", n)).direct;
  const IntMatrix id = build_theorem(Theorem::kT1, tabulate("id", n)).direct;
  for (long i = 1; i <= long(n); ++i) {
    for (long j = 1; j <= long(n); ++j) {
      const long d = oracle::gcd(i, j);
      ASSERT_EQ(phi(i, j), i - d);
      ASSERT_EQ(one(i, j), oracle::tau(i) - oracle::tau(d));
      ASSERT_EQ(id(i, j), oracle::sigma(i) - oracle::sigma(d));
      const long expected = i == 1 ? 0 : (d > 1 ? 0 : -1);
      ASSERT_EQ(mu(i, j), expected) << i << "," << j;
    }
  }
}

TEST(BuildTheorem, T2AndT3Examples) {
  const GcdIdentity t2 = build_theorem(Theorem::kT2, tabulate("one", 3));
  EXPECT_EQ(t2.direct, rows({{2, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
  const IntMatrix d3 = build_indicator(Indicator::kD, 3);
  EXPECT_EQ(t2.direct, oracle::multiply(d3, transpose(d3)));

  const GcdIdentity t3 = build_theorem(Theorem::kT3, tabulate("one", 3));
  EXPECT_EQ(t3.direct, rows({{3, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
  const IntMatrix dp3 = build_indicator(Indicator::kDPrime, 3);
  EXPECT_EQ(t3.direct, oracle::multiply(dp3, transpose(dp3)));
}

TEST(BuildTheorem, Theorem3LiteralDiffersOffTheCorner) {
  const IntMatrix literal = build_theorem3_literal(tabulate("one", 3));
  EXPECT_EQ(literal, rows({{3, 2, 2}, {2, 1, 0}, {2, 0, 1}}));
}

TEST(BuildTheorem, DirectEqualsProduct) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {1, 2, 3, 4, 6, 12, 31, 64, 100}) {
    auto tables = builtins(n);
    for (int r = 0; r < 20; ++r) tables.push_back(oracle::random_table(rng, n));
    for (const FunctionTable& g : tables) {
      for (Theorem t : {Theorem::kT1, Theorem::kT2, Theorem::kT3}) {
        const GcdIdentity id = build_theorem(t, g);
        const Factorization& f = id.factorization;
        ASSERT_EQ(id.direct,
                  oracle::multiply(oracle::multiply(f.left(), f.diag()),
                                   f.right()))
            << "theorem " << int(t) << " g=" << g.name() << " n=" << n;
      }
    }
  }
}

TEST(BuildTheorem, T1FirstRowZeroAndT2Symmetric) {
  std::mt19937_64 rng(24);
  for (std::size_t n : {1, 5, 20, 45}) {
    auto tables = builtins(n);
    tables.push_back(oracle::random_table(rng, n));
    for (const FunctionTable& g : tables) {
      const IntMatrix t1 = build_theorem(Theorem::kT1, g).direct;
      for (std::size_t j = 1; j <= n; ++j) ASSERT_EQ(t1(1, j), 0);
      const IntMatrix t2 = build_theorem(Theorem::kT2, g).direct;
      EXPECT_EQ(t2, transpose(t2));
    }
  }
}

TEST(BuildHform, Examples) {
  const GcdIdentity id3 = build_hform(tabulate("id", 3));
  EXPECT_EQ(id3.direct, rows({{0, 0, 0}, {1, 0, 1}, {2, 2, 0}}));
  EXPECT_EQ(id3.factorization.diag(), build_diag(tabulate("phi", 3)));

  // h(2) - h((2,1)) = h(2) - h(1) = 0 - 1.
  const GcdIdentity e3 = build_hform(table({1, 0, 0}));
  EXPECT_EQ(e3.direct(2, 1), -1);
  EXPECT_EQ(e3.direct(2, 2), 0);

  const GcdIdentity sigma4 = build_hform(tabulate("sigma", 4));
  EXPECT_EQ(sigma4.factorization.diag(), build_diag(table({1, 2, 3, 4})));
}

TEST(BuildHform, DirectEqualsProduct) {
  std::mt19937_64 rng(25);
  for (std::size_t n : {1, 2, 7, 30, 60}) {
    std::vector<FunctionTable> hs = {tabulate("id", n), tabulate("tau", n),
                                     tabulate("sigma", n)};
    for (int r = 0; r < 5; ++r) hs.push_back(oracle::random_table(rng, n));
    for (const FunctionTable& h : hs) {
      const GcdIdentity id = build_hform(h);
      const Factorization& f = id.factorization;
      ASSERT_EQ(id.direct, oracle::multiply(oracle::multiply(f.left(), f.diag()),
                                            f.right()))
          << h.name() << " n=" << n;
    }
  }
}

TEST(Factorization, RejectsBadShapes) {
  const IntMatrix i2 = IntMatrix::identity(2);
  EXPECT_THROW(Factorization(i2, IntMatrix::identity(3), i2, i2),
               std::invalid_argument);
  EXPECT_THROW(Factorization(i2, rows({{1, 1}, {0, 1}}), i2, i2),
               std::invalid_argument);
}

}  // namespace
}  // namespace gcdmat

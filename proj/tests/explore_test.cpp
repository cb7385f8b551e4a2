#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "gcdmat/explore.hpp"
#include "gcdmat/matbuild.hpp"
#include "oracles.hpp"

namespace gcdmat {
namespace {

ExploreSpec spec(const char* left, const char* right, Combiner op,
                 std::size_t n) {
  return {tabulate(left, n), tabulate(right, n), op, n};
}

TEST(Combiner, Names) {
  for (Combiner c : {Combiner::kAdd, Combiner::kSub, Combiner::kMul}) {
    EXPECT_EQ(parse_combiner(combiner_name(c)), c);
  }
  EXPECT_FALSE(parse_combiner("div").has_value());
}

TEST(ExploreProblem1, IdMinusGcd) {
  const ExploreReport r =
      explore_problem1(spec("id", "id", Combiner::kSub, 5));
  EXPECT_TRUE(r.first_row_zero);
  EXPECT_EQ(r.determinant, 0);
  EXPECT_FALSE(r.symmetric);
  EXPECT_FALSE(r.matrix.has_value());
}

TEST(ExploreProblem1, SigmaMinusSigmaIsTheorem1WithId) {
  const IntMatrix m = build_problem1(spec("sigma", "sigma", Combiner::kSub, 4));
  EXPECT_EQ(m, build_theorem(Theorem::kT1, tabulate("id", 4)).direct);
}

TEST(ExploreProblem1, OneTimesIdIsClassicGcd) {
  const ExploreReport r =
      explore_problem1(spec("one", "id", Combiner::kMul, 3), {true});
  ASSERT_TRUE(r.matrix.has_value());
  EXPECT_EQ(*r.matrix, IntMatrix::from_rows({{1, 1, 1}, {1, 2, 1}, {1, 1, 3}}));
  EXPECT_EQ(r.determinant, det_cofactor(*r.matrix));
  EXPECT_EQ(r.determinant, 2);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_TRUE(r.symmetric);
}

TEST(ExploreProblem1, Errors) {
  EXPECT_THROW(explore_problem1(spec("id", "id", Combiner::kAdd, 201)),
               CapExceeded);
  EXPECT_THROW(explore_problem1(spec("id", "id", Combiner::kAdd, 10), {false, 9}),
               CapExceeded);
  ExploreSpec short_right{tabulate("id", 6), tabulate("id", 4), Combiner::kAdd,
                          6};
  EXPECT_THROW(explore_problem1(short_right), std::invalid_argument);
}

TEST(ExploreProperties, SubOfSummatoryIsTheorem1) {
  for (auto name : {"phi", "tau", "sigma", "mu", "one", "id"}) {
    for (std::size_t n : {1, 7, 30, 50}) {
      const FunctionTable s = summatory(tabulate(name, n));
      EXPECT_EQ(build_problem1({s, s, Combiner::kSub, n}),
                build_theorem(Theorem::kT1, tabulate(name, n)).direct)
          << name << " n=" << n;
    }
  }
}

TEST(ExploreProperties, FlagsMatchScans) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const bool constant_left = trial % 3 == 0;
    FunctionTable left = constant_left
                             ? FunctionTable(std::vector<Integer>(
                                   n, Integer(long(rng() % 5) - 2)))
                             : oracle::random_table(rng, n, -2, 2);
    const FunctionTable right = oracle::random_table(rng, n, -2, 2);
    const Combiner op = static_cast<Combiner>(trial % 3);
    const ExploreReport r =
        explore_problem1({left, right, op, n}, {true});
    const IntMatrix& m = *r.matrix;

    bool zero_row = true;
    for (std::size_t j = 1; j <= n; ++j) zero_row &= m(1, j) == 0;
    EXPECT_EQ(r.first_row_zero, zero_row);
    if (r.first_row_zero) EXPECT_EQ(r.determinant, 0);
    bool symmetric = true;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) symmetric &= m(i, j) == m(j, i);
    }
    EXPECT_EQ(r.symmetric, symmetric);
    if (constant_left) EXPECT_TRUE(r.symmetric);
    EXPECT_EQ(r.determinant, det_cofactor(m));
    EXPECT_EQ(r.rank, oracle::minor_rank(m));
  }
}

TEST(ExploreJson, Envelope) {
  const ExploreReport r =
      explore_problem1(spec("id", "id", Combiner::kSub, 3), {true});
  EXPECT_EQ(
      to_json(r).dump(),
      R"({"check":"problem1","params":{"left":"id","right":"id","op":"sub",)"
      R"("n":3},"passed":true,"witness":null,"elapsed_ms":0.0,)"
      R"("structure":{"det":"0","rank":2,"first_row_zero":true,)"
      R"("symmetric":false},"matrix":[["0","0","0"],["1","0","1"],)"
      R"(["2","2","0"]]})");
}

}  // namespace
}  // namespace gcdmat

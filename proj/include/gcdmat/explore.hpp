#pragma once

// Exploration of matrices a_ij = F(i, (i,j)) where F combines a function of
// the row index with a function of the gcd.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "gcdmat/arithfun.hpp"
#include "gcdmat/exactla.hpp"
#include "gcdmat/int_matrix.hpp"

namespace gcdmat {

enum class Combiner { kAdd, kSub, kMul };

std::optional<Combiner> parse_combiner(std::string_view name);
std::string_view combiner_name(Combiner c);

struct ExploreSpec {
  FunctionTable left;   // applied to i
  FunctionTable right;  // applied to (i,j)
  Combiner op;
  std::size_t n;
};

struct ExploreReport {
  ExploreSpec spec;
  Integer determinant;
  std::size_t rank = 0;
  bool first_row_zero = false;
  bool symmetric = false;
  std::optional<IntMatrix> matrix;
  std::chrono::duration<double, std::milli> elapsed{};
};

struct ExploreOptions {
  bool keep_matrix = false;
  std::size_t cap = kDefaultDeterminantCap;
};

// Entry (i,j) = op(left(i), right((i,j))).  Both tables need >= n values.
IntMatrix build_problem1(const ExploreSpec& spec);

ExploreReport explore_problem1(const ExploreSpec& spec,
                               const ExploreOptions& options = {});

// Same envelope as verify reports, with "check": "problem1", params
// {left, right, op, n}, and a "structure" object.  "passed" records that
// a zero first row came with a zero determinant.
nlohmann::ordered_json to_json(const ExploreReport& r,
                               bool include_timing = false);

}  // namespace gcdmat

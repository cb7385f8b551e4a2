#include "gcdmat/explore.hpp"

#include <stdexcept>
#include <string>

namespace gcdmat {

namespace {

Integer combine(Combiner op, const Integer& a, const Integer& b) {
  switch (op) {
    case Combiner::kAdd:
      return a + b;
    case Combiner::kSub:
      return a - b;
    case Combiner::kMul:
      return a * b;
  }
  throw std::logic_error("unhandled combiner");
}

void require_length(const FunctionTable& t, std::size_t n, const char* side) {
  if (t.size() < n) {
    throw std::invalid_argument(std::string(side) + " table '" + t.name() +
                                "' has " + std::to_string(t.size()) +
                                " values, need " + std::to_string(n));
  }
}

}  // namespace

std::optional<Combiner> parse_combiner(std::string_view name) {
  if (name == "add") return Combiner::kAdd;
  if (name == "sub") return Combiner::kSub;
  if (name == "mul") return Combiner::kMul;
  return std::nullopt;
}

std::string_view combiner_name(Combiner c) {
  switch (c) {
    case Combiner::kAdd:
      return "add";
    case Combiner::kSub:
      return "sub";
    case Combiner::kMul:
      return "mul";
  }
  throw std::logic_error("unhandled combiner");
}

IntMatrix build_problem1(const ExploreSpec& spec) {
  const std::size_t n = spec.n;
  require_length(spec.left, n, "left");
  require_length(spec.right, n, "right");
  IntMatrix a(n, n);  // rejects n == 0
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const auto d = static_cast<std::size_t>(
          gcd(static_cast<long long>(i), static_cast<long long>(j)));
      a(i, j) = combine(spec.op, spec.left(i), spec.right(d));
    }
  }
  return a;
}

ExploreReport explore_problem1(const ExploreSpec& spec,
                               const ExploreOptions& options) {
  check_cap("determinant n", spec.n, options.cap);
  const auto start = std::chrono::steady_clock::now();
  IntMatrix a = build_problem1(spec);

  ExploreReport r{spec, Integer(0), 0, false, false, std::nullopt, {}};
  r.first_row_zero = true;
  for (std::size_t j = 1; j <= a.cols(); ++j) {
    if (a(1, j) != 0) r.first_row_zero = false;
  }
  r.symmetric = a == transpose(a);
  r.determinant = det_bareiss(a);
  r.rank = rank_ff(a);
  if (options.keep_matrix) r.matrix = std::move(a);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

nlohmann::ordered_json to_json(const ExploreReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["check"] = "problem1";
  j["params"] = {{"left", r.spec.left.name()},
                 {"right", r.spec.right.name()},
                 {"op", std::string(combiner_name(r.spec.op))},
                 {"n", r.spec.n}};
  const bool consistent = !r.first_row_zero || r.determinant == 0;
  j["passed"] = consistent;
  if (consistent) {
    j["witness"] = nullptr;
  } else {
    j["witness"] = {{"expected", "0"}, {"actual", r.determinant.get_str()}};
  }
  j["elapsed_ms"] = include_timing ? r.elapsed.count() : 0.0;
  j["structure"] = {{"det", r.determinant.get_str()},
                    {"rank", r.rank},
                    {"first_row_zero", r.first_row_zero},
                    {"symmetric", r.symmetric}};
  if (r.matrix) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i <= r.matrix->rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t k = 1; k <= r.matrix->cols(); ++k) {
        row.push_back((*r.matrix)(i, k).get_str());
      }
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

}  // namespace gcdmat

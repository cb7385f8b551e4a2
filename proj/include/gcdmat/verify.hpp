#pragma once

// Named, parameterized checks of the GCD-matrix identities.  Each check
// produces a Report; a failing Report always carries a witness.

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "gcdmat/arithfun.hpp"
#include "gcdmat/exactla.hpp"
#include "gcdmat/matbuild.hpp"

namespace gcdmat {

enum class CheckId {
  kSmithEq1,
  kSmithGeneral,
  kPolyaSzego,
  kCarlitz,
  kTheorem1,
  kTheorem2,
  kTheorem3,
  kTheorem3Literal,
  kRemark1,
  kRemark2,
};

struct CheckDescriptor {
  CheckId id;
  std::string_view name;
  std::string_view identity;
  // Determinant checks are bounded by the determinant cap, the rest by the
  // matrix cap.
  bool determinant;
  // theorem3_literal documents an erratum; it fails for generic g.
  bool expected_to_fail;
};

// The fixed registry, in declaration order.
std::span<const CheckDescriptor> list_checks();
const CheckDescriptor& describe(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);

struct EntryWitness {
  std::size_t i;
  std::size_t j;
  Integer expected;
  Integer actual;
};

struct DeterminantWitness {
  Integer expected;
  Integer actual;
};

using Witness = std::variant<EntryWitness, DeterminantWitness>;

struct Report {
  std::string check;
  std::string g_name;
  std::size_t n = 0;
  bool passed = false;
  std::optional<Witness> witness;
  std::chrono::duration<double, std::milli> elapsed{};
};

struct VerifyLimits {
  std::size_t matrix_cap = kDefaultMatrixCap;
  std::size_t determinant_cap = kDefaultDeterminantCap;
};

// Runs one check on g(1..n).  g must hold at least n values; smith_eq1 ignores
// g and remark2 reads it as h.  Throws CapExceeded past the relevant cap.
Report verify(CheckId id, const FunctionTable& g, std::size_t n,
              const VerifyLimits& limits = {});
// Throws std::invalid_argument for an unknown check name.
Report verify(std::string_view check, const FunctionTable& g, std::size_t n,
              const VerifyLimits& limits = {});

// {"check", "params": {"g", "n"}, "passed", "witness", "elapsed_ms"}.
// Big integers are base-10 strings.  With include_timing == false,
// elapsed_ms is written as 0 so output is reproducible byte for byte.
nlohmann::ordered_json to_json(const Report& r, bool include_timing = false);

}  // namespace gcdmat

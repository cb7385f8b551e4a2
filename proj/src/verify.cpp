#include "gcdmat/verify.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace gcdmat {

namespace {

constexpr std::array<CheckDescriptor, 10> kChecks = {{
    {CheckId::kSmithEq1, "smith_eq1", "det[(i,j)] = phi(1)...phi(n)", true,
     false},
    {CheckId::kSmithGeneral, "smith_general",
     "det[f((i,j))] = g(1)...g(n), f = sum_{d|n} g(d)", true, false},
    {CheckId::kPolyaSzego, "polya_szego", "[f((i,j))] = G C^T, G = C diag(g)",
     false, false},
    {CheckId::kCarlitz, "carlitz", "[f((i,j))] = C diag(g) C^T", false, false},
    {CheckId::kTheorem1, "theorem1", "[S(i) - S((i,j))] = C diag(g) D^T",
     false, false},
    {CheckId::kTheorem2, "theorem2",
     "[T - S(i) - S(j) + S((i,j))] = D diag(g) D^T", false, false},
    {CheckId::kTheorem3, "theorem3",
     "theorem2 matrix + g(1) at (1,1) = D' diag(g) D'^T", false, false},
    {CheckId::kTheorem3Literal, "theorem3_literal",
     "theorem2 matrix + g(1) on row 1 and column 1 = D' diag(g) D'^T", false,
     true},
    {CheckId::kRemark1, "remark1", "det[S(i) - S((i,j))] = 0", true, false},
    {CheckId::kRemark2, "remark2",
     "[h(i) - h((i,j))] = C diag(mu * h) D^T", false, false},
}};

Integer product_of(const FunctionTable& g) {
  Integer p = 1;
  for (const Integer& v : g.values()) p *= v;
  return p;
}

void record_entries(Report& r, const IntMatrix& expected,
                    const IntMatrix& actual) {
  if (auto m = first_mismatch(expected, actual)) {
    r.passed = false;
    r.witness = EntryWitness{m->i, m->j, std::move(m->expected),
                             std::move(m->actual)};
  } else {
    r.passed = true;
  }
}

void record_determinant(Report& r, Integer expected, Integer actual) {
  r.passed = expected == actual;
  if (!r.passed) {
    r.witness = DeterminantWitness{std::move(expected), std::move(actual)};
  }
}

void run_check(Report& r, CheckId id, const FunctionTable& g) {
  const std::size_t n = g.size();
  switch (id) {
    case CheckId::kSmithEq1:
      record_determinant(r, product_of(tabulate(Builtin::kPhi, n, n)),
                         det_bareiss(build_classic_gcd(
                             tabulate(Builtin::kId, n, n))));
      return;
    case CheckId::kSmithGeneral:
      record_determinant(r, product_of(g),
                         det_bareiss(build_classic_gcd(summatory(g))));
      return;
    case CheckId::kPolyaSzego: {
      const IntMatrix c = build_indicator(Indicator::kC, n);
      const IntMatrix gm = build_G(g);
      record_entries(r, build_classic_gcd(summatory(g)),
                     mat_mul(gm, transpose(c)));
      if (r.passed) record_entries(r, gm, mat_mul(c, build_diag(g)));
      return;
    }
    case CheckId::kCarlitz: {
      const IntMatrix c = build_indicator(Indicator::kC, n);
      const IntMatrix direct = build_classic_gcd(summatory(g));
      record_entries(r, direct,
                     product(Factorization(c, build_diag(g), transpose(c),
                                           direct)));
      return;
    }
    case CheckId::kTheorem1:
    case CheckId::kTheorem2:
    case CheckId::kTheorem3: {
      const Theorem t = id == CheckId::kTheorem1   ? Theorem::kT1
                        : id == CheckId::kTheorem2 ? Theorem::kT2
                                                   : Theorem::kT3;
      const GcdIdentity identity = build_theorem(t, g);
      record_entries(r, identity.direct, product(identity.factorization));
      return;
    }
    case CheckId::kTheorem3Literal:
      record_entries(
          r, build_theorem3_literal(g),
          product(build_theorem(Theorem::kT3, g).factorization));
      return;
    case CheckId::kRemark1:
      record_determinant(r, Integer(0),
                         det_bareiss(build_theorem(Theorem::kT1, g).direct));
      return;
    case CheckId::kRemark2: {
      const GcdIdentity identity = build_hform(g);
      record_entries(r, identity.direct, product(identity.factorization));
      return;
    }
  }
  throw std::logic_error("unhandled check");
}

}  // namespace

std::span<const CheckDescriptor> list_checks() { return kChecks; }

const CheckDescriptor& describe(CheckId id) {
  for (const CheckDescriptor& d : kChecks) {
    if (d.id == id) return d;
  }
  throw std::logic_error("unhandled check");
}

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (const CheckDescriptor& d : kChecks) {
    if (d.name == name) return d.id;
  }
  return std::nullopt;
}

Report verify(CheckId id, const FunctionTable& g, std::size_t n,
              const VerifyLimits& limits) {
  const CheckDescriptor& desc = describe(id);
  if (n < 1) throw std::invalid_argument("verify requires n >= 1");
  check_cap(desc.determinant ? "determinant n" : "matrix n", n,
            desc.determinant ? limits.determinant_cap : limits.matrix_cap);

  Report r;
  r.check = std::string(desc.name);
  r.n = n;
  const auto start = std::chrono::steady_clock::now();
  if (id == CheckId::kSmithEq1) {
    r.g_name = "phi";
    run_check(r, id, tabulate(Builtin::kPhi, n, n));
  } else {
    if (g.size() < n) {
      throw std::invalid_argument("table '" + g.name() + "' has " +
                                  std::to_string(g.size()) +
                                  " values, check needs n = " +
                                  std::to_string(n));
    }
    r.g_name = g.name();
    run_check(r, id, g.truncated(n));
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

Report verify(std::string_view check, const FunctionTable& g, std::size_t n,
              const VerifyLimits& limits) {
  auto id = parse_check_id(check);
  if (!id) {
    throw std::invalid_argument("unknown check '" + std::string(check) + "'");
  }
  return verify(*id, g, n, limits);
}

nlohmann::ordered_json to_json(const Report& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["params"] = {{"g", r.g_name}, {"n", r.n}};
  j["passed"] = r.passed;
  if (!r.witness) {
    j["witness"] = nullptr;
  } else if (const auto* e = std::get_if<EntryWitness>(&*r.witness)) {
    j["witness"] = {{"i", e->i},
                    {"j", e->j},
                    {"expected", e->expected.get_str()},
                    {"actual", e->actual.get_str()}};
  } else {
    const auto& d = std::get<DeterminantWitness>(*r.witness);
    j["witness"] = {{"expected", d.expected.get_str()},
                    {"actual", d.actual.get_str()}};
  }
  j["elapsed_ms"] = include_timing ? r.elapsed.count() : 0.0;
  return j;
}

}  // namespace gcdmat

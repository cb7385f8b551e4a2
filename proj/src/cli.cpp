#include "gcdmat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcdmat/arithfun.hpp"
#include "gcdmat/exactla.hpp"
#include "gcdmat/explore.hpp"
#include "gcdmat/matbuild.hpp"
#include "gcdmat/verify.hpp"

namespace gcdmat::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::string_view kCustomPrefix = "custom:";

// <builtin>, <builtin>-summatory, <builtin>-inverse or custom:PATH.
FunctionTable resolve_table(const std::string& spec, std::size_t n) {
  if (spec.starts_with(kCustomPrefix)) {
    return load_custom(spec.substr(kCustomPrefix.size()), n);
  }
  std::string_view base = spec;
  enum { kPlain, kSummatory, kInverse } transform = kPlain;
  if (auto dash = base.rfind('-'); dash != std::string_view::npos) {
    const std::string_view suffix = base.substr(dash + 1);
    if (suffix == "summatory") {
      transform = kSummatory;
    } else if (suffix == "inverse") {
      transform = kInverse;
    } else {
      throw UsageError("unknown function suffix '-" + std::string(suffix) +
                       "' in '" + spec + "'");
    }
    base = base.substr(0, dash);
  }
  auto b = parse_builtin(base);
  if (!b) {
    throw UsageError("unknown function '" + std::string(base) +
                     "' (expected phi, tau, sigma, mu, one, id or "
                     "custom:PATH)");
  }
  FunctionTable t = tabulate(*b, n);
  switch (transform) {
    case kSummatory:
      return summatory(t);
    case kInverse:
      return mobius_invert(t);
    case kPlain:
      break;
  }
  return t;
}

std::size_t determinant_cap(const Environment& env) {
  if (!env.n_cap_override) return kDefaultDeterminantCap;
  const std::string& text = *env.n_cap_override;
  std::size_t pos = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || cap == 0) {
    throw UsageError("GCDMAT_N_CAP must be a positive integer, got '" + text +
                     "'");
  }
  return static_cast<std::size_t>(cap);
}

nlohmann::ordered_json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_table(const FunctionTable& t, const std::string& format,
                std::ostream& out) {
  if (format == "json") {
    auto values = nlohmann::ordered_json::array();
    for (const Integer& v : t.values()) values.push_back(v.get_str());
    nlohmann::ordered_json j;
    j["name"] = t.name();
    j["n"] = t.size();
    j["values"] = std::move(values);
    out << j.dump() << '\n';
  } else if (format == "latex") {
    std::string ks = "k", vs = t.name().empty() ? "g(k)" : t.name();
    for (std::size_t k = 1; k <= t.size(); ++k) {
      ks += " & " + std::to_string(k);
      vs += " & " + t(k).get_str();
    }
    out << "\\begin{tabular}{l" << std::string(t.size(), 'r') << "}\n"
        << ks << " \\\\\n"
        << vs << " \\\\\n"
        << "\\end{tabular}\n";
  } else {
    // One value per line: the custom-function file format.
    for (const Integer& v : t.values()) out << v.get_str() << '\n';
  }
}

struct BuildArgs {
  std::string kind;
  std::string g;
  std::size_t n = 0;
  std::string format = "csv";
};

const std::vector<std::string> kKinds = {"classic", "t1", "t2",    "t3",
                                         "hform",   "C",  "D",     "Dprime",
                                         "G",       "diag"};

IntMatrix build_kind(const BuildArgs& a) {
  if (a.kind == "C") return build_indicator(Indicator::kC, a.n);
  if (a.kind == "D") return build_indicator(Indicator::kD, a.n);
  if (a.kind == "Dprime") return build_indicator(Indicator::kDPrime, a.n);
  if (a.g.empty()) throw UsageError("--kind " + a.kind + " requires --g");
  const FunctionTable g = resolve_table(a.g, a.n);
  if (a.kind == "classic") return build_classic_gcd(g);
  if (a.kind == "t1") return build_theorem(Theorem::kT1, g).direct;
  if (a.kind == "t2") return build_theorem(Theorem::kT2, g).direct;
  if (a.kind == "t3") return build_theorem(Theorem::kT3, g).direct;
  if (a.kind == "hform") return build_hform(g).direct;
  if (a.kind == "G") return build_G(g);
  if (a.kind == "diag") return build_diag(g);
  throw UsageError("unknown matrix kind '" + a.kind + "'");
}

struct VerifyArgs {
  std::string check;
  std::string g;
  std::size_t n = 0;
  std::size_t sweep = 0;
  bool timing = false;
};

int run_verify(const VerifyArgs& a, const Environment& env,
               std::ostream& out) {
  std::vector<CheckId> ids;
  if (a.check == "all") {
    for (const CheckDescriptor& d : list_checks()) ids.push_back(d.id);
  } else if (auto id = parse_check_id(a.check)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown check '" + a.check + "'");
  }

  std::size_t lo = a.n, hi = a.n;
  if (a.sweep > 0) {
    lo = a.n == 0 ? 1 : a.n;
    hi = a.sweep;
    if (lo > hi) {
      throw UsageError("--n " + std::to_string(lo) + " is larger than --sweep " +
                       std::to_string(hi));
    }
  } else if (a.n == 0) {
    throw UsageError("verify requires --n or --sweep");
  }

  const VerifyLimits limits{kDefaultMatrixCap, determinant_cap(env)};
  for (CheckId id : ids) {
    const CheckDescriptor& d = describe(id);
    check_cap(d.determinant ? "determinant n" : "matrix n", hi,
              d.determinant ? limits.determinant_cap : limits.matrix_cap);
  }

  const bool needs_g = std::any_of(ids.begin(), ids.end(), [](CheckId id) {
    return id != CheckId::kSmithEq1;
  });
  if (needs_g && a.g.empty()) throw UsageError("verify requires --g");
  const FunctionTable g =
      needs_g ? resolve_table(a.g, hi) : tabulate(Builtin::kOne, 1);

  std::vector<Report> reports;
  for (CheckId id : ids) {
    for (std::size_t n = lo; n <= hi; ++n) {
      reports.push_back(verify(id, g, n, limits));
    }
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const Report& x, const Report& y) {
                     return std::tie(x.check, x.n) < std::tie(y.check, y.n);
                   });

  bool all_passed = true;
  for (const Report& r : reports) {
    out << to_json(r, a.timing).dump() << '\n';
    if (!r.passed && !describe(*parse_check_id(r.check)).expected_to_fail) {
      all_passed = false;
    }
  }
  return all_passed ? kOk : kVerificationFailed;
}

struct ExploreArgs {
  std::string left;
  std::string right;
  std::string op;
  std::size_t n = 0;
  bool emit_matrix = false;
  bool timing = false;
};

int run_explore(const ExploreArgs& a, const Environment& env,
                std::ostream& out) {
  const auto op = parse_combiner(a.op);
  if (!op) throw UsageError("unknown --op '" + a.op + "'");
  const std::size_t cap = determinant_cap(env);
  check_cap("determinant n", a.n, cap);
  ExploreSpec spec{resolve_table(a.left, a.n), resolve_table(a.right, a.n),
                   *op, a.n};
  ExploreReport r = explore_problem1(spec, {a.emit_matrix, cap});
  out << to_json(r, a.timing).dump() << '\n';
  return kOk;
}

}  // namespace

Environment environment_from_process() {
  Environment env;
  if (const char* cap = std::getenv("GCDMAT_N_CAP")) env.n_cap_override = cap;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Environment& env) {
  CLI::App app{"Exact GCD matrices, their factorizations and determinants",
               "gcdmat"};
  app.require_subcommand(1);

  const auto formats = CLI::IsMember({"csv", "json", "latex"});
  const auto positive = CLI::Range(std::size_t{1},
                                   std::numeric_limits<std::size_t>::max());

  struct {
    std::string g;
    std::size_t n = 0;
    bool summatory = false;
    bool invert = false;
    std::string format = "csv";
  } table_args;
  auto* table = app.add_subcommand("table", "Tabulate g(1..n)");
  table->add_option("--g", table_args.g, "Function: name, name-summatory, "
                                         "name-inverse or custom:PATH")
      ->required();
  table->add_option("--n", table_args.n)->required()->check(positive);
  auto* summ_flag = table->add_flag("--summatory", table_args.summatory,
                                    "Emit sum over d | k of g(d)");
  table->add_flag("--invert", table_args.invert, "Emit the Moebius inverse")
      ->excludes(summ_flag);
  table->add_option("--format", table_args.format)->check(formats);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Emit a matrix");
  build->add_option("--kind", build_args.kind)
      ->required()
      ->check(CLI::IsMember(kKinds));
  build->add_option("--g", build_args.g);
  build->add_option("--n", build_args.n)->required()->check(positive);
  build->add_option("--format", build_args.format)->check(formats);

  BuildArgs det_args;
  auto* det = app.add_subcommand("det", "Exact determinant of a matrix");
  det->add_option("--kind", det_args.kind)
      ->required()
      ->check(CLI::IsMember(kKinds));
  det->add_option("--g", det_args.g);
  det->add_option("--n", det_args.n)->required()->check(positive);

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check identities, one JSON report per line");
  verify_cmd->add_option("--check", verify_args.check, "Check name or 'all'")
      ->required();
  verify_cmd->add_option("--g", verify_args.g);
  verify_cmd->add_option("--n", verify_args.n)->check(positive);
  verify_cmd->add_option("--sweep", verify_args.sweep,
                         "Run every n from --n (default 1) to MAX")
      ->check(positive);
  verify_cmd->add_flag("--timing", verify_args.timing,
                       "Report measured elapsed_ms instead of 0");

  ExploreArgs explore_args;
  auto* explore =
      app.add_subcommand("explore", "Structure of a_ij = F(i, (i,j))");
  explore->add_option("--left", explore_args.left)->required();
  explore->add_option("--right", explore_args.right)->required();
  explore->add_option("--op", explore_args.op)
      ->required()
      ->check(CLI::IsMember({"add", "sub", "mul"}));
  explore->add_option("--n", explore_args.n)->required()->check(positive);
  explore->add_flag("--emit-matrix", explore_args.emit_matrix);
  explore->add_flag("--timing", explore_args.timing);

  std::vector<const char*> argv{"gcdmat"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (table->parsed()) {
      check_cap("table n", table_args.n, kDefaultTableCap);
      FunctionTable t = resolve_table(table_args.g, table_args.n);
      if (table_args.summatory) t = summatory(t);
      if (table_args.invert) t = mobius_invert(t);
      emit_table(t, table_args.format, out);
      return kOk;
    }
    if (build->parsed()) {
      check_cap("matrix n", build_args.n, kDefaultMatrixCap);
      const IntMatrix m = build_kind(build_args);
      if (build_args.format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = build_args.kind;
        j["g"] = build_args.g.empty() ? nlohmann::ordered_json(nullptr)
                                      : nlohmann::ordered_json(build_args.g);
        j["n"] = build_args.n;
        j["matrix"] = matrix_json(m);
        out << j.dump() << '\n';
      } else if (build_args.format == "latex") {
        out << to_latex(m);
      } else {
        out << to_csv(m);
      }
      return kOk;
    }
    if (det->parsed()) {
      check_cap("determinant n", det_args.n, determinant_cap(env));
      out << det_bareiss(build_kind(det_args)).get_str() << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) return run_verify(verify_args, env, out);
    if (explore->parsed()) return run_explore(explore_args, env, out);
  } catch (const CapExceeded& e) {
    err << "gcdmat: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "gcdmat: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gcdmat::cli

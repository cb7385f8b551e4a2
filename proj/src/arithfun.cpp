#include "gcdmat/arithfun.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace gcdmat {

namespace {

constexpr std::array<std::pair<std::string_view, Builtin>, 6> kBuiltins = {{
    {"phi", Builtin::kPhi},
    {"tau", Builtin::kTau},
    {"sigma", Builtin::kSigma},
    {"mu", Builtin::kMu},
    {"one", Builtin::kOne},
    {"id", Builtin::kId},
}};

// Prime factorization of k >= 1 as (prime, exponent) pairs.
std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t k) {
  std::vector<std::pair<std::size_t, unsigned>> factors;
  for (std::size_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (k > 1) factors.emplace_back(k, 1);
  return factors;
}

Integer evaluate(Builtin b, std::size_t k) {
  switch (b) {
    case Builtin::kOne:
      return 1;
    case Builtin::kId:
      return Integer(static_cast<unsigned long>(k));
    case Builtin::kTau:
      return Integer(static_cast<unsigned long>(divisors(k).size()));
    case Builtin::kSigma: {
      Integer s = 0;
      for (std::size_t d : divisors(k)) s += static_cast<unsigned long>(d);
      return s;
    }
    case Builtin::kPhi: {
      Integer phi = static_cast<unsigned long>(k);
      for (auto [p, e] : factorize(k)) {
        phi /= static_cast<unsigned long>(p);
        phi *= static_cast<unsigned long>(p - 1);
      }
      return phi;
    }
    case Builtin::kMu: {
      int sign = 1;
      for (auto [p, e] : factorize(k)) {
        if (e > 1) return 0;
        sign = -sign;
      }
      return sign;
    }
  }
  throw std::logic_error("unhandled builtin");
}

std::string trim(std::string_view s) {
  auto first = std::find_if_not(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c);
  });
  auto last = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) {
                return std::isspace(c);
              }).base();
  return first < last ? std::string(first, last) : std::string();
}

bool is_base10_integer(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

FunctionTable::FunctionTable(std::vector<Integer> values, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {
  if (values_.empty()) {
    throw std::invalid_argument("function table must have n >= 1 values");
  }
}

const Integer& FunctionTable::operator()(std::size_t k) const {
  if (k < 1 || k > values_.size()) {
    throw std::out_of_range("table index " + std::to_string(k) +
                            " outside 1.." + std::to_string(values_.size()));
  }
  return values_[k - 1];
}

FunctionTable FunctionTable::truncated(std::size_t n) const {
  if (n < 1 || n > values_.size()) {
    throw std::invalid_argument("cannot truncate table '" + name_ + "' of " +
                                std::to_string(values_.size()) +
                                " values to " + std::to_string(n));
  }
  return FunctionTable(
      std::vector<Integer>(values_.begin(),
                           values_.begin() + static_cast<std::ptrdiff_t>(n)),
      name_);
}

std::optional<Builtin> parse_builtin(std::string_view name) {
  for (auto [key, b] : kBuiltins) {
    if (key == name) return b;
  }
  return std::nullopt;
}

std::string_view builtin_name(Builtin b) {
  for (auto [key, value] : kBuiltins) {
    if (value == b) return key;
  }
  throw std::logic_error("unhandled builtin");
}

long long gcd(long long a, long long b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("gcd requires positive arguments, got (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ")");
  }
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::vector<std::size_t> divisors(std::size_t k) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    small.push_back(d);
    if (d != k / d) large.push_back(k / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

FunctionTable tabulate(Builtin b, std::size_t n, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("tabulate requires n >= 1");
  check_cap("table n", n, cap);
  std::vector<Integer> values;
  values.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) values.push_back(evaluate(b, k));
  return FunctionTable(std::move(values), std::string(builtin_name(b)));
}

FunctionTable tabulate(std::string_view name, std::size_t n, std::size_t cap) {
  auto b = parse_builtin(name);
  if (!b) {
    throw std::invalid_argument("unknown arithmetical function '" +
                                std::string(name) +
                                "' (expected phi, tau, sigma, mu, one or id)");
  }
  return tabulate(*b, n, cap);
}

FunctionTable dirichlet_unit(std::size_t n) {
  std::vector<Integer> values(n, Integer(0));
  if (!values.empty()) values[0] = 1;
  return FunctionTable(std::move(values), "e");
}

FunctionTable summatory(const FunctionTable& g) {
  const std::size_t n = g.size();
  std::vector<Integer> f(n, Integer(0));
  for (std::size_t d = 1; d <= n; ++d) {
    for (std::size_t m = d; m <= n; m += d) f[m - 1] += g(d);
  }
  return FunctionTable(std::move(f), g.name() + "-summatory");
}

FunctionTable dirichlet_convolve(const FunctionTable& a,
                                 const FunctionTable& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(
        "dirichlet_convolve: length mismatch (" + std::to_string(a.size()) +
        " vs " + std::to_string(b.size()) + ")");
  }
  const std::size_t n = a.size();
  std::vector<Integer> r(n, Integer(0));
  for (std::size_t d = 1; d <= n; ++d) {
    if (a(d) == 0) continue;
    for (std::size_t e = 1; d * e <= n; ++e) r[d * e - 1] += a(d) * b(e);
  }
  return FunctionTable(std::move(r), a.name() + "*" + b.name());
}

FunctionTable mobius_invert(const FunctionTable& f) {
  FunctionTable g = dirichlet_convolve(tabulate(Builtin::kMu, f.size(),
                                                f.size()),
                                       f);
  return FunctionTable(std::vector<Integer>(g.values().begin(),
                                            g.values().end()),
                       f.name() + "-inverse");
}

FunctionTable load_custom(const std::filesystem::path& path, std::size_t n) {
  if (n < 1) throw std::invalid_argument("load_custom requires n >= 1");
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open function file '" + path.string() +
                             "'");
  }
  std::vector<Integer> values;
  values.reserve(n);
  std::string line;
  std::size_t line_no = 0;
  while (values.size() < n && std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": blank line");
    }
    if (!is_base10_integer(text)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": not a base-10 integer: '" + text + "'");
    }
    if (text[0] == '+') text.erase(0, 1);
    values.emplace_back(text, 10);
  }
  if (values.size() < n) {
    throw std::runtime_error("short file '" + path.string() + "': expected " +
                             std::to_string(n) + " values, found " +
                             std::to_string(values.size()));
  }
  return FunctionTable(std::move(values), path.filename().string());
}

}  // namespace gcdmat

#pragma once

// Arithmetical functions as finite tables g(1..n) of exact integers, with
// Dirichlet convolution and Moebius inversion.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcdmat/integer.hpp"

namespace gcdmat {

inline constexpr std::size_t kDefaultTableCap = 10000;

// Values g(1), ..., g(n) of an arithmetical function.  Immutable once built.
class FunctionTable {
 public:
  // Throws std::invalid_argument if `values` is empty.
  explicit FunctionTable(std::vector<Integer> values, std::string name = {});

  std::size_t size() const { return values_.size(); }
  const std::string& name() const { return name_; }

  // 1-indexed: operator()(k) is g(k).  Throws std::out_of_range outside 1..n.
  const Integer& operator()(std::size_t k) const;

  std::span<const Integer> values() const { return values_; }

  // First n entries, same name.  Requires 1 <= n <= size().
  FunctionTable truncated(std::size_t n) const;

  // Compares values only; names are labels.
  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Integer> values_;
  std::string name_;
};

enum class Builtin { kPhi, kTau, kSigma, kMu, kOne, kId };

std::optional<Builtin> parse_builtin(std::string_view name);
std::string_view builtin_name(Builtin b);

// Greatest common divisor of two positive integers.
// Throws std::invalid_argument unless a >= 1 and b >= 1.
long long gcd(long long a, long long b);

// Divisors of k in increasing order, by trial division up to sqrt(k).
std::vector<std::size_t> divisors(std::size_t k);

FunctionTable tabulate(Builtin b, std::size_t n,
                       std::size_t cap = kDefaultTableCap);
// Throws std::invalid_argument for names outside
// {phi, tau, sigma, mu, one, id}.
FunctionTable tabulate(std::string_view name, std::size_t n,
                       std::size_t cap = kDefaultTableCap);

// e(1) = 1, e(k) = 0 otherwise; the unit of Dirichlet convolution.
FunctionTable dirichlet_unit(std::size_t n);

// f(k) = sum over d | k of g(d).
FunctionTable summatory(const FunctionTable& g);

// (a * b)(k) = sum over d | k of a(d) b(k/d).  Lengths must agree.
FunctionTable dirichlet_convolve(const FunctionTable& a,
                                 const FunctionTable& b);

// The g with summatory(g) == f, i.e. mu * f.
FunctionTable mobius_invert(const FunctionTable& f);

// Reads the first n lines of a file holding one base-10 integer per line.
// Errors (std::runtime_error) name the file and, for bad lines, the line
// number.
FunctionTable load_custom(const std::filesystem::path& path, std::size_t n);

}  // namespace gcdmat

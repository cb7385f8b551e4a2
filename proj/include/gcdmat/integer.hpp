#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gcdmat {

// Every value in the library is an exact, unbounded integer.
using Integer = mpz_class;

// A size parameter exceeded its configured limit.
class CapExceeded : public std::out_of_range {
 public:
  CapExceeded(std::string what_n, std::size_t n, std::size_t cap)
      : std::out_of_range(what_n + " = " + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t n() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

inline void check_cap(const char* what_n, std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(what_n, n, cap);
}

}  // namespace gcdmat

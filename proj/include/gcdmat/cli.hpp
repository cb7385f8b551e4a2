#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gcdmat::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

struct Environment {
  // GCDMAT_N_CAP, overriding the determinant cap.
  std::optional<std::string> n_cap_override;
};

Environment environment_from_process();

// args excludes the program name.  Regular output goes to `out`, diagnostics
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Environment& env = {});

}  // namespace gcdmat::cli

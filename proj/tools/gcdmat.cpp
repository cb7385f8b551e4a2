#include <iostream>
#include <string>
#include <vector>

#include "gcdmat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gcdmat::cli::run(args, std::cout, std::cerr,
                          gcdmat::cli::environment_from_process());
}

#include <iostream>

#include "semireg/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semireg::cli::run(args, std::cout, std::cerr);
}

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  int exit_code = 0;
  const auto config = icsolve::cli::parse_args(argc, argv, std::cout, std::cerr, exit_code);
  if (!config) return exit_code;
  return icsolve::cli::run(*config, std::cout, std::cerr);
}

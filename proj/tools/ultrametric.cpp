#include <iostream>
#include <string>
#include <vector>

#include "ultrametric/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return ultrametric::cli::run(args, std::cin, std::cout);
}

#include <iostream>
#include <string>
#include <vector>

#include "hyperperron/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperperron::cli::run(args, std::cout, std::cerr);
}

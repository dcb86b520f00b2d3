#include <iostream>
#include <vector>

#include "scd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scd::run_cli(args, std::cout, std::cerr);
}

#include <iostream>

#include "lfgt/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lfgt::run_cli(args, std::cout, std::cerr);
}

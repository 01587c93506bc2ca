#include <iostream>
#include <vector>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toric::run_command(args, std::cin, std::cout, std::cerr);
}

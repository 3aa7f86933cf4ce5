#include <iostream>
#include <string>
#include <vector>

#include "polysnf/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polysnf::cli::run_command(args, std::cout, std::cerr);
}

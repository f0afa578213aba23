#include <iostream>
#include <string>
#include <vector>

#include "mmplan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mmplan::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "tanglecolor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tc::run_cli(args, std::cout, std::cerr);
}

#include <iostream>

#include "kirwan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kirwan::run_cli(args, std::cout, std::cerr);
}

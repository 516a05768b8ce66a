#include <iostream>
#include <string>
#include <vector>

#include "walkmat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return walkmat::cli::run(args, std::cin, std::cout, std::cerr);
}

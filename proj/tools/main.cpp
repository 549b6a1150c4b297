#include <iostream>
#include <string>
#include <vector>

#include "dcsum_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dcsum::cli::run(args, std::cout, std::cerr);
}

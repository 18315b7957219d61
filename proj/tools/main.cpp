#include <iostream>
#include <string>
#include <vector>

#include "threedist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return threedist::cli::run(args, std::cout, std::cerr);
}

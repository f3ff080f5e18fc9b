#include <iostream>
#include <string>
#include <vector>

#include "hamming/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hamming::cli::run(args, std::cout, std::cerr);
}

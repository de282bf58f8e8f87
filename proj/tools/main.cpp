#include <iostream>
#include <string>
#include <vector>

#include "at2ff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return at2ff::cli::run(args, std::cout, std::cerr);
}

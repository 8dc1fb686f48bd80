#include <iostream>
#include <string>
#include <vector>

#include "vspin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vspin::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "fide/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fide::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "tot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tot::cli::run(args, std::cout, std::cerr);
}

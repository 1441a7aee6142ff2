#include <iostream>
#include <string>
#include <vector>

#include "gidyn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gidyn::cli::run(args, std::cout, std::cerr);
}

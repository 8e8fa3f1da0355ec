#include <iostream>
#include <string>
#include <vector>

#include "gsmon/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gsmon::run(args, std::cout, std::cerr);
}

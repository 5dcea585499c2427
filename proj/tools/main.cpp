#include <iostream>
#include <string>
#include <vector>

#include "cyclocode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclocode::run(args, std::cout, std::cerr);
}

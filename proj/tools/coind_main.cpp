#include <iostream>
#include <string>
#include <vector>

#include "coind/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coind::run_command(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "lfl_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lfl::io::run_command(args, std::cout, std::cerr);
}

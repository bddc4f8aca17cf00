#include <iostream>
#include <string>
#include <vector>

#include "besselpow/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  besselpow::CommandResult res = besselpow::run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}

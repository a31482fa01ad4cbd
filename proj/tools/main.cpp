#include <iostream>
#include <string>
#include <vector>

#include "betavote/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return betavote::run_cli(args, std::cout, std::cerr);
}

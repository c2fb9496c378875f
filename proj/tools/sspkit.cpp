#include <iostream>
#include <string>
#include <vector>

#include "sspkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ssp::run_cli(args, std::cout, std::cerr);
}

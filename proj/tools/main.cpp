#include <iostream>
#include <string>
#include <vector>

#include "binsub/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return binsub::cli_main(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "homfly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homfly::run_cli(args, std::cin, std::cout, std::cerr);
}

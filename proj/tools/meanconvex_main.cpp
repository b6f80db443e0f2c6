#include <iostream>
#include <string>
#include <vector>

#include "meanconvex/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return meanconvex::run_cli(args, std::cout, std::cerr);
}

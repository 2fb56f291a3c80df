#include <iostream>
#include <string>
#include <vector>

#include "pbq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pbq::run_cli(std::move(args), std::cout, std::cerr);
}

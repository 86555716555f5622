#include <iostream>
#include <string>
#include <vector>

#include "qlozenge_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qlozenge::cli::run(args, std::cout, std::cerr);
}

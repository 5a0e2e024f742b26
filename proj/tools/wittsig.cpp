#include <iostream>
#include <string>
#include <vector>

#include "wittsig/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wittsig::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "subst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return subst::cli::run(args, std::cout, std::cerr);
}

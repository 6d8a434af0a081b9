#include <iostream>
#include <string>
#include <vector>

#include "privcoal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return privcoal::cli::run(args, std::cout, std::cerr);
}

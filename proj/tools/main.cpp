#include <iostream>
#include <string>
#include <vector>

#include "maxplus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return maxplus::cli::run(args, std::cout, std::cerr);
}

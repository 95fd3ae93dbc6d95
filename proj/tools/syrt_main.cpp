#include <iostream>
#include <vector>

#include "syrt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return syrt::run(args, std::cout, std::cerr);
}

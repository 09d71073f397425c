#include <iostream>
#include <string>
#include <vector>

#include "testlens/cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv, argv + argc);
  return testlens::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "dircyc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return dircyc::runCli(args, std::cout, std::cerr);
}

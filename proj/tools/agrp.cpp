#include <iostream>

#include "agrp/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return agrp::run_cli(args, std::cout, std::cerr);
}

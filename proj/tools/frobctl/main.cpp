#include <iostream>

#include "frobctl.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frobctl::run_command(args, std::cout, std::cerr);
}

#include <iostream>

#include "motzeta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return motzeta::run(args, std::cout, std::cerr);
}

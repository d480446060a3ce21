#include <iostream>

#include "cayley4p/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cayley4p::run(args, std::cout, std::cerr);
}

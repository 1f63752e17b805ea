#include <iostream>

#include "staticvac/cli.hpp"

int main(int argc, char** argv) {
  return staticvac::cli::main(argc, argv, std::cout, std::cerr);
}

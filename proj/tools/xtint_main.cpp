#include <iostream>

#include "xtint/cli.hpp"

int main(int argc, char** argv) {
  return xtint::cli::run(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "graded/cli.hpp"

int main(int argc, char** argv) {
  return graded::run_cli(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "lietower/cli.hpp"

int main(int argc, char** argv) {
  return lietower::run_cli(argc, argv, std::cout, std::cerr);
}

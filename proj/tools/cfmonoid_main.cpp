#include <iostream>

#include "cfmonoid/cli.hpp"

int main(int argc, char** argv) {
  return cfmonoid::run_cli(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "bmfrenet/cli.hpp"

int main(int argc, char** argv) {
  return bmfrenet::run_cli(argc, argv, std::cout, std::cerr);
}

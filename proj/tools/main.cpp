#include <iostream>

#include "fpg/cli.hpp"

int main(int argc, char** argv) {
  return fpg::run_cli(argc, argv, std::cout, std::cerr);
}

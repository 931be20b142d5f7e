#include <iostream>

#include "solvcore/cli.hpp"

int main(int argc, char** argv) {
  return solvcore::cli::run_main(argc, argv, std::cout, std::cerr);
}

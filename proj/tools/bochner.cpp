#include <iostream>

#include "bochner/cli.hpp"

int main(int argc, char** argv) {
  return bochner::cli::run(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "mml/cli.hpp"

int main(int argc, char** argv) {
  return mml::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}

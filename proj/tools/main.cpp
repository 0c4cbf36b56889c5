#include <iostream>

#include "semi/cli.hpp"

int main(int argc, char** argv) {
  return semi::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}

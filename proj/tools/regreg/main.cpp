#include <iostream>

#include "regreg/commands.hpp"

int main(int argc, char** argv) {
  return regreg::cli::run(argc, argv, std::cout, std::cerr);
}

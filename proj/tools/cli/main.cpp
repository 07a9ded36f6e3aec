#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  return drft::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}

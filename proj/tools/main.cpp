#include <iostream>

#include "cantor/cli.hpp"

int main(int argc, char** argv) {
  return cantor::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}

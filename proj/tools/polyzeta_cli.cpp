#include <iostream>

#include "polyzeta/cli.hpp"

int main(int argc, char** argv) {
  return polyzeta::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}

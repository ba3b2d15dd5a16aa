#include <iostream>

#include "schubert/cli.hpp"

int main(int argc, char** argv) {
  return schubert::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}

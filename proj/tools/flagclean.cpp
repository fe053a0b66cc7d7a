#include <iostream>

#include "flagclean/cli.hpp"

int main(int argc, char** argv) {
  return flagclean::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}

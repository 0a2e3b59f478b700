#include <iostream>

#include "x49/cli.hpp"

int main(int argc, char** argv) {
  return x49::run({argv + 1, argv + argc}, std::cout, std::cerr);
}

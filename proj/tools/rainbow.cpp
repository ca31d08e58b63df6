#include <iostream>

#include "rainbow/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return rainbow::cli::dispatch({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}

#include <iostream>

#include "halving/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return halving::cli::dispatch(args, std::cout, std::cerr);
}

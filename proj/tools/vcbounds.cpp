#include <iostream>
#include <string>
#include <vector>

#include "vcb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vcb::cli::run(std::move(args), std::cout, std::cerr);
}

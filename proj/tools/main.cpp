#include <iostream>
#include <string>
#include <vector>

#include "hda/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hda::cli::run(args, std::cout, std::cerr);
}

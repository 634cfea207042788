#include <iostream>
#include <string>
#include <vector>

#include "ru4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ru4::run_cli(args, std::cout, std::cerr);
}

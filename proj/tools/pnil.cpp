// Thin entry point for the pnil command line tool.
#include <iostream>
#include <string>
#include <vector>

#include "pnil/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pnil::cli::run_cli(std::move(args), std::cout);
}

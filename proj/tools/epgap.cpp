#include <iostream>

#include "epgap/cli.hpp"

int main(int argc, char** argv) {
  std::ios_base::sync_with_stdio(false);
  return epgap::cli::run_cli(argc, argv, std::cout, std::cerr);
}

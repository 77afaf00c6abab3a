#include <iostream>

#include "grpf/cli.hpp"

int main(int argc, char** argv) {
  return grpf::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

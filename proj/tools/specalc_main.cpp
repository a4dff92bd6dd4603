#include <iostream>

#include "specalc/cli.hpp"

int main(int argc, char** argv) {
  return specalc::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

#include <iostream>

#include "geodiam/cli.hpp"

int main(int argc, char** argv) {
  return geodiam::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

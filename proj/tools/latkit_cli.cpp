#include <iostream>

#include "latkit/cli.hpp"

int main(int argc, char** argv) {
  return latkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

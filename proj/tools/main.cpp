#include <iostream>

#include "mayan/cli.hpp"

int main(int argc, char** argv) {
  return mayan::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

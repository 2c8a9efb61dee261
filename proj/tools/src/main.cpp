#include <iostream>
#include <string>
#include <vector>

#include "partpoly/cli/app.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return partpoly::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

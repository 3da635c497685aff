#include <iostream>

#include "hcmcg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hcmcg::run(args, std::cout, std::cerr);
}

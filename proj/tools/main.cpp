#include <iostream>

#include "hommine/cli.hpp"

int main(int argc, char** argv) {
  return hommine::run_cli(argc, argv, std::cout, std::cerr);
}

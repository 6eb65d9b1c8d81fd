#include <iostream>
#include <vector>

#include "pcl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcl::cli_run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "radonlink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return radonlink::run_cli(args, std::cout, std::cerr);
}

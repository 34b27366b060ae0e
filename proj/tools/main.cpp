#include <iostream>
#include <string>
#include <vector>

#include "wfsep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wfsep::dispatch(args, std::cout);
}

#include <iostream>
#include <vector>

#include "ecd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = ecd::run_command(args);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.error.empty()) std::cerr << result.error;
  return result.exit_code;
}

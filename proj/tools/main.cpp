#include <iostream>
#include <string>
#include <vector>

#include "quadcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const quadcert::RunResult result = quadcert::run(args);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.exit_code;
}

#pragma once

#include <string>
#include <vector>

namespace quadcert {

// Result of one CLI invocation. Exit codes: 0 = nonnegative-side class
// delivered (PD/PSD/Zero), 1 = negative-side or indefinite class delivered,
// 2 = input error, 3 = internal verification failure (must never occur).
struct RunResult {
  int exit_code = 0;
  std::string output;       // results stream
  std::string diagnostics;  // error/help stream
};

// Commands: classify, certify, witness, minors, hessian, oracle.
// Flags: --matrix TEXT, --form TEXT, --file PATH, --batch PATH (classify),
//        --all, --json, --seed N, --trials N.
RunResult run(const std::vector<std::string>& args);

}  // namespace quadcert

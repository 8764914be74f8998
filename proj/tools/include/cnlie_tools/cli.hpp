#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cnlie::tools {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2, kInvalidAlgebra = 3 };

// Entry point of the `cnlie` executable; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnlie::tools

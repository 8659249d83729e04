#pragma once

#include <string>

#include "hyperharm/bounds.hpp"
#include "hyperharm/error.hpp"
#include "hyperharm/suites.hpp"

namespace hyperharm {

/// Exit-code contract: 0 pass, 1 assertion failure, 2 validation error, 3 numerical-convergence failure.
enum ExitCode : int { kExitPass = 0, kExitAssertion = 1, kExitValidation = 2, kExitNumerical = 3 };

int exit_code_for(ErrorKind kind);

/// One line per assertion plus the summary numbers.
std::string summarize(const SuiteReport& report);
std::string summarize(const std::string& bound, const BoundReport& report);

}  // namespace hyperharm

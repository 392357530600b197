#pragma once

#include <exception>
#include <ostream>

namespace prab::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitValidation = 2,
    kExitNonConvergence = 3,
    kExitIo = 4,
};

int exit_code_for(const std::exception& e) noexcept;

/// One machine-readable line: error kind=<Kind> code=<n> msg="..." [line=.. column=..]
void report_error(std::ostream& err, const std::exception& e);

/// Entry point of the prabsolve tool. Subcommands: solve, check, ml.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prab::cli

#ifndef MATLIN_TOOLS_CLI_HPP
#define MATLIN_TOOLS_CLI_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace matlin::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_cutoff = 3,
    exit_axiom = 4,
    exit_invalid_input = 5,
    exit_verification = 6,
};

/// Runs one command line (arguments after the program name) and returns
/// the exit status. `env_jobs` is the value of MATLIN_JOBS, or null.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* env_jobs = nullptr);

struct SelftestResult {
    Json report;
    bool passed = true;
};
/// Golden checks on the built-in example; the report never depends on `jobs`.
SelftestResult selftest(std::size_t jobs);

}  // namespace matlin::cli

#endif

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace singular {

struct CliResult {
    int exit_code = 0;  // 0 ok, 1 failed verification, 2 bad input
    std::string out;
    std::string err;
};

// Runs one invocation; args exclude the program name. Pure function of the
// arguments plus the SINGULAR_DEPTH / SINGULAR_SEED environment overrides
// (explicit flags win over the environment, which wins over defaults).
CliResult run_cli(const std::vector<std::string>& args);

// Convenience wrapper for main(): prints the streams, returns the code.
int run_cli_main(int argc, char** argv);

// Which subcommand exercises each library operation. Kept as data so a test
// can assert every public operation is reachable exactly once.
const std::vector<std::pair<std::string, std::string>>& operation_dispatch();

}  // namespace singular

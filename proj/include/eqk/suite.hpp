#pragma once

#include "eqk/json_io.hpp"

namespace eqk {

// Configuration of a named verification suite. The seed fully determines
// every randomized case, so identical (suite, seed, cases) runs produce
// byte-identical reports; cases fan out over a worker pool and the report is
// assembled in case order.
struct SuiteConfig {
    std::string suite;                     // identities | distribution | integrality
    std::uint64_t seed = 1;
    unsigned cases = 100;
    std::vector<std::string> groups;       // catalog selection (identities)
    std::vector<std::uint64_t> primes;     // good primes (identities)
};

// Report: {"suite", "seed", "cases", "checks": [{"name", "status",
// "witness"}]}; status is "pass" or "fail", witness names the violated
// identity instance on failure.
Json run_suite(const SuiteConfig& config);

// The CLI entry point, separated from main() so tests can call it directly.
struct CommandResult {
    int exit_code = 0;
    std::string output;
};
CommandResult run_command(const std::vector<std::string>& args);

} // namespace eqk

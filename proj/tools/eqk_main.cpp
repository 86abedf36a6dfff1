#include <cstdio>

#include "eqk/suite.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    eqk::CommandResult result = eqk::run_command(args);
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}

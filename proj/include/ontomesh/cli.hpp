#pragma once

#include <string>
#include <vector>

namespace ontomesh {

struct CommandResult {
    int status = 0; // 0 success, 1 domain error, 2 usage/parse error
    std::string out;
    std::string err;
};

// Runs one batch subcommand. args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace ontomesh

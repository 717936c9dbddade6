#include "ontomesh/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const ontomesh::CommandResult result = ontomesh::run_command(args);
    if (!result.out.empty()) {
        std::fputs(result.out.c_str(), stdout);
    }
    if (!result.err.empty()) {
        std::fputs(result.err.c_str(), stderr);
    }
    return result.status;
}

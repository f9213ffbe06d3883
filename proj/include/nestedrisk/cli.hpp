#pragma once

#include <string>
#include <vector>

namespace nestedrisk::cli {

// Runs one subcommand (tc-check, avar, properties, acceptance-check,
// conjugate-check). args excludes the program name.
// Exit codes: 0 = pass, 1 = fail (with witness), 2 = input or usage error.
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

}  // namespace nestedrisk::cli

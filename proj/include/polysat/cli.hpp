#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polysat {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // infeasible, not polyunsaturated, ...
inline constexpr int kExitError = 2;     // usage, input, or limit errors

// Runs one command; args excludes the program name. Standard input is only
// read when a subcommand needs a poset and neither --input nor --inline is
// given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace polysat

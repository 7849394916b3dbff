#ifndef MATDECIDE_CLI_HPP
#define MATDECIDE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace matdecide::cli {

// Exit codes shared by every subcommand.
constexpr int kYes = 0;        // yes, or a witness was found
constexpr int kNo = 1;         // definitive no
constexpr int kUnknown = 2;    // bounded search exhausted without a witness
constexpr int kUsage = 64;     // bad command line
constexpr int kDataErr = 65;   // malformed input file
constexpr int kInternal = 70;  // invariant violation inside the toolkit

/// Runs one command. `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace matdecide::cli

#endif  // MATDECIDE_CLI_HPP

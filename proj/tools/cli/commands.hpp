#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace clat::cli {

// Every subcommand the tool accepts, in help-text order.
const std::vector<std::string_view>& command_names();

// Runs one invocation. args[0] is the program name. Writes one CommandResult
// JSON document to `out`. Returns 0 on success, 1 on a library error and 2
// on malformed input or flags.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace clat::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hda::cli {

// Runs one command-line invocation; args excludes the program name.
// Exit codes: 0 property holds / success, 1 property or relation
// fails, 2 input or usage error, 3 internal theorem violation.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hda::cli

#pragma once

#include <iosfwd>
#include <set>
#include <string>

#include "tautdrg/tolerances.hpp"

namespace tautdrg::cli {

enum ExitCode : int {
    kOk = 0,
    kHypothesis = 1,
    kVerification = 2,
    kIo = 3,
    kUsage = 4,
};

struct AnalysisConfig {
    std::string command;   // analyze | generate | verify
    std::string input;     // edge-list path
    std::string family;    // NAME:PARAMS
    std::string vertex = "0";  // integer or "all"
    bool json = false;
    bool exhaustive = false;
    std::string output;    // empty: stdout
    std::set<std::string> sections;
    Tolerances tol;
};

// Parses argv and runs the subcommand. Reports go to `out` (or --output),
// diagnostics to `err`. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tautdrg::cli

#pragma once

#include <string>

#include "secsheaf/document.hpp"

namespace secsheaf {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit statuses of the batch front end.
enum ExitCode : int {
    kExitOk = 0,            // all checks passed or were skipped
    kExitViolation = 1,     // a check failed (or an internal cross-check tripped)
    kExitInputError = 2,    // malformed or inconsistent document
    kExitGuardTripped = 3,  // an enumeration cap was exceeded
};

struct RunOutcome {
    json report;
    int exit_code = kExitOk;
    std::string dot;  // filled by export-dot
};

// Runs one command over a raw JSON document.  Reports are deterministic:
// identical documents produce byte-identical reports (timings appear only
// when requested).
RunOutcome run_command(const std::string& command, const json& document,
                       bool include_timings = false);

}  // namespace secsheaf

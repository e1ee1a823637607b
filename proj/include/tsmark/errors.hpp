#pragma once

#include <stdexcept>
#include <string>

namespace tsmark {

// Error taxonomy mirrored by the CLI exit codes:
// ConfigError -> 1 (usage), DataError -> 2 (data), AnalysisError -> 3 (analysis).

/// Invalid parameters or configuration supplied by the caller.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent input data.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Well-formed input on which the requested analysis is undefined.
struct AnalysisError : std::runtime_error {
    explicit AnalysisError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tsmark

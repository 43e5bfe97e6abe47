#pragma once

#include <stdexcept>
#include <string>

namespace ppsf {

/// Bad arguments, bad config, degenerate geometry. CLI exit code 1.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Solver non-convergence or a failed numerical verification. CLI exit code 2.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem trouble. CLI exit code 3.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ppsf

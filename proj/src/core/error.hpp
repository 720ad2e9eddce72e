#pragma once

#include <stdexcept>
#include <string>

namespace subsum {

enum class ErrorCode {
    invalid_argument,
    parse_error,
    cap_exceeded,
    budget_exceeded,
    unknown_claim,
    io_error,
    checkpoint_mismatch,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised when a run is stopped early through the progress callback.  The
// orchestrator writes a checkpoint (when one was requested) before throwing.
class Interrupted : public std::runtime_error {
public:
    Interrupted() : std::runtime_error("run interrupted") {}
};

} // namespace subsum

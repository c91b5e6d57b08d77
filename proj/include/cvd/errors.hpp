#pragma once

#include <stdexcept>
#include <string>

namespace cvd {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a documented precondition (bad pair of vertices,
// infeasible solution handed to a lift, non-induced cycle, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// A structural claim the construction relies on failed at runtime.
// On valid inputs these never fire; they surface misuse or bugs as
// catchable values instead of aborting the process.
struct InvariantError : Error {
    explicit InvariantError(const std::string& msg) : Error(msg) {}
};

// An exact solver refused an instance larger than its budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Instance file could not be parsed; carries a 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace cvd

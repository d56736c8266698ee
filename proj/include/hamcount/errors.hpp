#pragma once

#include <stdexcept>
#include <string>

namespace hamcount {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (bad index, bad dimension).
struct ContractViolation : Error {
    using Error::Error;
};

struct DimensionMismatch : ContractViolation {
    using ContractViolation::ContractViolation;
};

// An enumeration or symbolic expansion would exceed its configured size cap.
struct CapExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

}  // namespace hamcount

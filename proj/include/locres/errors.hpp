#pragma once

#include <stdexcept>
#include <string>

namespace locres {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text: polynomial grammar violations, bad problem files.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// Structurally invalid input: unknown keys, mismatched counts, bad flags.
struct InputError : Error {
    using Error::Error;
};

// A mathematical precondition fails: non-isolated zero, q(0) = 0, r outside
// the ideal, non-degree-compatible order where one is required.
struct MathError : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

}  // namespace locres

#pragma once

#include <stdexcept>
#include <string>

namespace grel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values: family parameter below minimum, vertex out of range,
// malformed partition, size mismatch between composed objects.
struct InvalidParameterError : Error {
    using Error::Error;
};

// Structurally valid input the operation does not handle (directed input to
// line_graph, disconnected input to drm, ...).
struct UnsupportedInputError : Error {
    using Error::Error;
};

// A stated precondition does not hold (relation without full image, graph not
// point-determining, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// A search or enumeration ran out of its node budget. Distinct from a
// definitive negative answer.
struct BudgetError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace grel

#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

// Invalid argument to an operation (bad family parameters, malformed path, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input exceeds a solver's configured order cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coloring that is not a total assignment with contiguous class indices.
struct MalformedColoringError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// gamma_t / chi_d^t requested on a graph with an isolated vertex.
struct UndefinedInvariantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Byte-level input could not be decoded.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), offset(0) {}
    std::size_t offset;
};

// No closed-form formula covers the requested family.
struct UnsupportedFamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exact solve ran out of its time budget; carries the bounds proved so far.
struct BudgetExceededError : std::runtime_error {
    BudgetExceededError(const std::string& what, long long lower, long long upper)
        : std::runtime_error(what), lower(lower), upper(upper) {}
    long long lower;
    long long upper;
};

}  // namespace tdc

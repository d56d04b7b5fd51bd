#pragma once

#include <stdexcept>
#include <string>

namespace mbe {

// Malformed textual input (graph file, flags).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Top-level input graphs must be connected.
class DisconnectedGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A pull-based stream broke its contract (e.g. decreasing weights on a
// relevant-element stream, or weight classes consumed out of order).
class StreamContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Exhaustive oracles refuse instances beyond their configured bounds.
class GuardExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mbe

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divrank {

// Malformed or precondition-violating input (bad ids, self-loops,
// disconnected graphs where connectivity is required, thresholds out of range).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computed object failed a postcondition check: a lifted witness that is
// not recurrent, a reduction equality that does not hold, and so on.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by legal replay when the vertex at `position` is not active.
class IllegalFiring : public InputError {
public:
    IllegalFiring(std::size_t position, std::size_t vertex)
        : InputError("illegal firing of vertex " + std::to_string(vertex) + " at position " +
                     std::to_string(position)),
          position_(position), vertex_(vertex) {}

    std::size_t position() const noexcept { return position_; }
    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t position_;
    std::size_t vertex_;
};

}  // namespace divrank

#pragma once

#include <stdexcept>
#include <string>

namespace superquiver {

// Shape mismatch between two operands.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain (not a sink, index out of
// range, root not positive, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Internal consistency check failed (a construction produced data that
// violates a proven property).
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace superquiver

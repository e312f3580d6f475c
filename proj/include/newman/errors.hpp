#pragma once

#include <stdexcept>
#include <string>

namespace newman {

// Bad argument: violated precondition, malformed checkpoint list, wrong modulus class.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Value outside the 64-bit integer domain the library works in.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Result is mathematically undefined at this point (e.g. log of a nonpositive sum).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Floating-point evaluation of the explicit formula drifted too far from an integer.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested table would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace newman

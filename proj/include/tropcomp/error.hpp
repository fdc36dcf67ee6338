#pragma once

#include <stdexcept>
#include <string>

namespace tropcomp {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed, inconsistent or precondition-violating input.
class invalid_input : public error {
public:
    using error::error;
};

/// Input is well formed but degenerate where nondegeneracy is required.
class degenerate_instance : public invalid_input {
public:
    using invalid_input::invalid_input;
};

/// A brute-force size guard was exceeded.
class guard_exceeded : public error {
public:
    using error::error;
};

/// An invariant that the theory guarantees was found violated.
class internal_error : public error {
public:
    using error::error;
};

}  // namespace tropcomp

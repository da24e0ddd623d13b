#pragma once

#include <stdexcept>
#include <string>

namespace qhurwitz {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

/// Raised when a denominator vanishes at an evaluation point. Callers that
/// sample random points retry with a fresh one.
class evaluation_pole : public error {
public:
    using error::error;
};

/// Two scalars built over different parameter sets were combined.
class context_mismatch : public error {
public:
    using error::error;
};

/// Truncated series of different orders were combined.
class order_mismatch : public error {
public:
    using error::error;
};

/// Partitions of different weights were passed where equal weights are required.
class weight_mismatch : public error {
public:
    using error::error;
};

/// A size parameter exceeded the configured enumeration bound.
class bound_exceeded : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace qhurwitz

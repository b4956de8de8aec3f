#pragma once

#include <stdexcept>

namespace relent {

/// Base class for all precondition violations reported by the library.
class error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands of a tensor composition do not have the expected dimensions.
class dimension_mismatch : public error {
public:
    using error::error;
};

/// A partition request is empty, covers all qubits, or names a qubit twice.
class invalid_partition : public error {
public:
    using error::error;
};

/// A spatial direction is not a unit vector (or cannot be normalized).
class invalid_direction : public error {
public:
    using error::error;
};

/// A four-momentum is not timelike with positive energy.
class invalid_momentum : public error {
public:
    using error::error;
};

/// A state lies outside the opposite-momentum scenario the boost machinery covers.
class unsupported_scenario : public error {
public:
    using error::error;
};

/// The transformed measurement direction has (near-)zero spatial part.
class singular_observable : public error {
public:
    using error::error;
};

/// A four-vector with (near-)zero spatial part cannot define a direction.
class singular_direction : public error {
public:
    using error::error;
};

} // namespace relent

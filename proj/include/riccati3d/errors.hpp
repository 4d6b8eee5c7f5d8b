#pragma once

#include <stdexcept>
#include <string>

namespace riccati3d {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Biquaternion with (numerically) vanishing modulus; not invertible even if nonzero.
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

/// A field was evaluated at an excluded (singular) point or outside its box.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A scalar that must be nonvanishing (Cole-Hopf source, A-potential, denominator) hit zero.
class ZeroCrossing : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// Denominator of a conical group action vanished.
class PoleError : public Error {
public:
    using Error::Error;
};

class NotPureVector : public Error {
public:
    using Error::Error;
};

/// The symmetry machinery is defined on the real slice only.
class NonRealPotential : public Error {
public:
    using Error::Error;
};

/// Input violates a sampled precondition (e.g. two solutions with different potentials).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed run configuration or command-line input.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace riccati3d

#pragma once

#include <stdexcept>

namespace lrfhss {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside the model's domain (payload range, non-positive
/// battery capacity, infeasible notification period, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Query outside the span covered by a calibration curve. Extrapolation is
/// always refused; measured curves are only trusted between their knots.
class SpanError : public Error {
public:
    using Error::Error;
};

/// No calibration points exist at all for the requested data-rate class.
class MissingCalibrationError : public Error {
public:
    using Error::Error;
};

/// A calibration violates a value invariant (message names the field).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A calibration document is not structurally readable.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace lrfhss

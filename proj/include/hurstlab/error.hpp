#pragma once

#include <stdexcept>
#include <string>

namespace hurstlab {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input has fewer observations than the operation requires.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// A value is outside the mathematical domain of the operation
/// (non-positive price, non-finite sample, non-positive fit input).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The series has zero variance (or zero fluctuation) where a spread is required.
class DegenerateSeriesError : public Error {
public:
    using Error::Error;
};

/// A block size or scale set is incompatible with the window it is applied to.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// An index range falls outside the series.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed (singular fit, invalid spectral embedding).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV input: missing column, bad cell, or out-of-order dates.
class CsvError : public Error {
public:
    using Error::Error;
};

/// Reading or writing a stream/file failed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace hurstlab

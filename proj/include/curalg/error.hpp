#pragma once

#include <stdexcept>
#include <string>

namespace curalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A truncated computation needed terms it does not have.
class HeadroomError : public Error {
public:
    using Error::Error;
};

/// A slice touched a product that was truncated by the algebra window.
class UntrustedSliceError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

class StabilizationError : public Error {
public:
    using Error::Error;
};

} // namespace curalg

#pragma once

#include <stdexcept>
#include <string>

namespace diffinv {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (CLI exit code 2).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Physical data violate the maximum-principle bounds of the scenario.
class AdmissibilityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A numerical procedure could not reach its tolerance (CLI exit code 3).
class ToleranceError : public Error {
public:
    using Error::Error;
};

}  // namespace diffinv

#pragma once

#include <stdexcept>
#include <string>

namespace cedga {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
public:
    RingMismatch() : Error("coefficient ring mismatch") {}
    explicit RingMismatch(const std::string& what) : Error("coefficient ring mismatch: " + what) {}
};

class ZeroDivision : public Error {
public:
    ZeroDivision() : Error("division by zero") {}
};

/// A generator appears without a differential assignment.
class IncompletePresentation : public Error {
public:
    explicit IncompletePresentation(const std::string& gen)
        : Error("generator '" + gen + "' has no differential"), generator(gen) {}
    std::string generator;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The operation is not defined for this presentation (e.g. h0 on a relation
/// that involves generators of nonzero degree).
class UnsupportedPresentation : public Error {
public:
    using Error::Error;
};

}  // namespace cedga

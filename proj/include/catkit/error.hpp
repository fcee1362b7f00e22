#pragma once

#include <stdexcept>
#include <string>

namespace catkit {

enum class ErrorKind {
    CurvatureMismatch,
    InvalidSides,
    NoSuchTriangle,
    NoLimit,
    Domain,
    IncompleteAngles,
    WrongArity,
    InvalidComplex,
    InconsistentRealization,
    NeedsTriangulation,
    Unreachable,
    UnusableComplex,
    DegenerateInput,
    InvalidInput,
    Construction,
    Parse,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; the kind carries the error class.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace catkit

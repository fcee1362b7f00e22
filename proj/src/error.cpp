#include "catkit/error.hpp"

namespace catkit {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::CurvatureMismatch: return "curvature-mismatch";
    case ErrorKind::InvalidSides: return "invalid-sides";
    case ErrorKind::NoSuchTriangle: return "no-such-triangle";
    case ErrorKind::NoLimit: return "no-limit";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::IncompleteAngles: return "incomplete-angles";
    case ErrorKind::WrongArity: return "wrong-arity";
    case ErrorKind::InvalidComplex: return "invalid-complex";
    case ErrorKind::InconsistentRealization: return "inconsistent-realization";
    case ErrorKind::NeedsTriangulation: return "needs-triangulation";
    case ErrorKind::Unreachable: return "unreachable";
    case ErrorKind::UnusableComplex: return "unusable-complex";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Construction: return "construction";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace catkit

#include "gapsym/error.h"

namespace gapsym {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput:
            return "EmptyInput";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::GcdNotOne:
            return "GcdNotOne";
        case ErrorKind::NotTwoGenerated:
            return "NotTwoGenerated";
        case ErrorKind::NotAGap:
            return "NotAGap";
        case ErrorKind::OutOfTriangle:
            return "OutOfTriangle";
        case ErrorKind::PrincipalModule:
            return "PrincipalModule";
        case ErrorKind::PartitionViolation:
            return "PartitionViolation";
        case ErrorKind::InconsistentInput:
            return "InconsistentInput";
        case ErrorKind::Ambiguous:
            return "Ambiguous";
        case ErrorKind::NotASemigroup:
            return "NotASemigroup";
        case ErrorKind::XNotInGaps:
            return "XNotInGaps";
        case ErrorKind::BoundTooSmall:
            return "BoundTooSmall";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace gapsym

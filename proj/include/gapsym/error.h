#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gapsym {

enum class ErrorKind {
    EmptyInput,
    InvalidArgument,
    GcdNotOne,
    NotTwoGenerated,
    NotAGap,
    OutOfTriangle,
    PrincipalModule,
    PartitionViolation,
    InconsistentInput,
    Ambiguous,
    NotASemigroup,
    XNotInGaps,
    BoundTooSmall,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace gapsym

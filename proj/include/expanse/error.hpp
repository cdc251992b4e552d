#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expanse {

enum class ErrorCode {
    UnknownVertex,
    TooManyVertices,
    FaceNotInComplex,
    VertexNotInComplex,
    VoidComplex,
    InvalidExpansionVector,
    InvalidHypergraph,
    NotAPermutation,
    NotAShelling,
    NotShellable,
    NotPureOneDimensional,
    TooLarge,
    BudgetExceeded,
    InvalidInput,
    TheoremViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace expanse

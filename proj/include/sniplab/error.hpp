#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sniplab {

enum class ErrorKind {
    SingularBlock,
    ShapeMismatch,
    NotSymmetric,
    InvalidOp,
    SizeLimit,
    OutOfRange,
    NotNeutral,
    NotUpper,
    NotABasis,
    PairTooSmall,
    NotNeutralSquare,
    DegenerateKernel,
    NoSmallEps,
    ZeroWeight,
    GridTooLarge,
    NotACutVertex,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every sniplab operation. The kind names match the
/// error names used in reports and CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return to_string(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace sniplab

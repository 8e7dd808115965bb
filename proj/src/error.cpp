#include "sniplab/error.hpp"

namespace sniplab {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::SingularBlock: return "SingularBlock";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InvalidOp: return "InvalidOp";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotNeutral: return "NotNeutral";
    case ErrorKind::NotUpper: return "NotUpper";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::PairTooSmall: return "PairTooSmall";
    case ErrorKind::NotNeutralSquare: return "NotNeutralSquare";
    case ErrorKind::DegenerateKernel: return "DegenerateKernel";
    case ErrorKind::NoSmallEps: return "NoSmallEps";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
    case ErrorKind::NotACutVertex: return "NotACutVertex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

}  // namespace sniplab

#include "wvol/error.hpp"

namespace wvol {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorKind::NegativeArgument: return "NegativeArgument";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::EmptyProfile: return "EmptyProfile";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::InconclusiveSign: return "InconclusiveSign";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::OverflowGuard: return "OverflowGuard";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::UnknownKey: return "UnknownKey";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace wvol

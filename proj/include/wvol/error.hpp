#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wvol {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  NonPositiveArgument,
  NegativeArgument,
  InvalidInterval,
  InvalidProfile,
  EmptyProfile,
  InvalidDimension,
  InconclusiveSign,
  EmptyWindow,
  OverflowGuard,
  ExponentOverflow,
  UnknownKey,
};

std::string_view kind_name(ErrorKind kind);

/// All library failures are reported through this type. The message is
/// prefixed with the kind name so it can be surfaced verbatim by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wvol

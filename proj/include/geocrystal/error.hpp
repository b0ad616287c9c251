#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geocrystal {

enum class ErrorKind {
  NotGCM,
  NotSymmetrizable,
  BadIndex,
  IndexAbsent,
  SingularIntermediate,
  CartanMismatch,
  WrongType,
  PatternMismatch,
  ZeroTorusValue,
  OutsideOpenCell,
  NotPositive,
  Overflow,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every validation failure in the library is reported through this type.
/// `position()` carries the offending index where one exists (the vanishing
/// leading minor for OutsideOpenCell, the coordinate for
/// SingularIntermediate, the first mismatching slot for PatternMismatch).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace geocrystal

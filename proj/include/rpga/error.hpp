#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rpga {

enum class ErrorCode {
  UnknownGate,
  GateTooWide,
  InvalidGate,
  WidthError,
  BadWidth,
  PinOutOfRange,
  PinClash,
  SlotConflict,
  NoSuchPlacement,
  TooWide,
  NoOutputs,
  MalformedTable,
  NotSymmetric,
  ConfigMismatch,
  NotConfigured,
  FormatError,
};

std::string_view to_string(ErrorCode code);

/// True for errors that stem from unreadable input text rather than from
/// a well-formed request the domain rejects.
bool is_parse_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based position. `line == 0` means the position
/// refers to the document as a whole (e.g. a missing row at end of input).
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::size_t column, const std::string& message,
              std::string expected = {},
              ErrorCode code = ErrorCode::FormatError);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string expected_;
};

}  // namespace rpga

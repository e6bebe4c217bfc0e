#include "rpga/error.hpp"

#include <sstream>

namespace rpga {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownGate: return "UnknownGate";
    case ErrorCode::GateTooWide: return "GateTooWide";
    case ErrorCode::InvalidGate: return "InvalidGate";
    case ErrorCode::WidthError: return "WidthError";
    case ErrorCode::BadWidth: return "BadWidth";
    case ErrorCode::PinOutOfRange: return "PinOutOfRange";
    case ErrorCode::PinClash: return "PinClash";
    case ErrorCode::SlotConflict: return "SlotConflict";
    case ErrorCode::NoSuchPlacement: return "NoSuchPlacement";
    case ErrorCode::TooWide: return "TooWide";
    case ErrorCode::NoOutputs: return "NoOutputs";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
    case ErrorCode::NotConfigured: return "NotConfigured";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

bool is_parse_error(ErrorCode code) {
  return code == ErrorCode::FormatError || code == ErrorCode::MalformedTable;
}

namespace {

std::string describe(std::size_t line, std::size_t column, const std::string& message,
                     const std::string& expected) {
  std::ostringstream out;
  if (line > 0) out << "line " << line << ", column " << column << ": ";
  out << message;
  if (!expected.empty()) out << " (expected " << expected << ")";
  return out.str();
}

}  // namespace

FormatError::FormatError(std::size_t line, std::size_t column, const std::string& message,
                         std::string expected, ErrorCode code)
    : Error(code, describe(line, column, message, expected)),
      line_(line),
      column_(column),
      message_(message),
      expected_(std::move(expected)) {}

}  // namespace rpga

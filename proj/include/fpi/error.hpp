#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fpi {

enum class ErrorKind {
  Syntax,
  NonPrime,
  NonHomogeneous,
  UnknownVariable,
  Mismatch,
  Resource,
  NoNzdFound,
  NoNzdInIdeal,
  NotCohenMacaulay,
  UnsupportedDimension,
  InfiniteLength,
  NonMonomial,
  TruncationInsufficient,
  PipelineInvariant,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::Resource: return "ResourceExceeded";
    case ErrorKind::NoNzdFound: return "NoNzdFound";
    case ErrorKind::NoNzdInIdeal: return "NoNzdInIdeal";
    case ErrorKind::NotCohenMacaulay: return "NotCohenMacaulay";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::InfiniteLength: return "InfiniteLength";
    case ErrorKind::NonMonomial: return "NonMonomial";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::PipelineInvariant: return "PipelineInvariant";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The kind is
/// stable and is what the CLI prints; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry a 1-based position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fpi

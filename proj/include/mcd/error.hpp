#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcd {

/// Failure categories raised by the library. Geometric validity problems are
/// reported through ValidationReport instead; these are hard errors.
enum class Errc {
  Overflow,
  InvalidArgument,
  Degenerate,
  NotCircular,
  EventAtCut,
  NotAFlag,
  InvalidDrawing,
  ParseError,
  GenerationFailed,
  TooLarge,
  WrappingPair,
  NoSplit,
  ParamsRequired,
  UnrelatedVertex,
  NoValidCut,
};

inline std::string_view to_string(Errc c) {
  switch (c) {
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Degenerate: return "Degenerate";
    case Errc::NotCircular: return "NotCircular";
    case Errc::EventAtCut: return "EventAtCut";
    case Errc::NotAFlag: return "NotAFlag";
    case Errc::InvalidDrawing: return "InvalidDrawing";
    case Errc::ParseError: return "ParseError";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::TooLarge: return "TooLarge";
    case Errc::WrappingPair: return "WrappingPair";
    case Errc::NoSplit: return "NoSplit";
    case Errc::ParamsRequired: return "ParamsRequired";
    case Errc::UnrelatedVertex: return "UnrelatedVertex";
    case Errc::NoValidCut: return "NoValidCut";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Input text did not follow the MCD1 / matching grammar.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(Errc::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mcd

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geofit
{

/// Every failure the library reports carries one of these kinds.
enum class ErrorKind
{
    InvalidArgument,
    DimensionMismatch,
    TooFewPoints,
    DegenerateX,
    DegenerateY,
    ParseError,
    EmptyDataset,
    ColumnNotFound,
    RaggedRow,
    BoxTooSmall,
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::DegenerateX: return "DegenerateX";
    case ErrorKind::DegenerateY: return "DegenerateY";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::ColumnNotFound: return "ColumnNotFound";
    case ErrorKind::RaggedRow: return "RaggedRow";
    case ErrorKind::BoxTooSmall: return "BoxTooSmall";
    }
    return "Unknown";
}

class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Parse failures also carry the 1-based line and field position.
class ParseError : public Error
{
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason)
        : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + reason),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace geofit

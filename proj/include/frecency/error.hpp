#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frecency {

enum class ErrorKind {
    MissingHeader,
    MalformedRow,
    BadNumber,
    InvariantViolation,
    EmptyInput,
    MixedTargets,
    InvalidEvent,
    SingularMatrix,
    TooFewRows,
    ConstantFeature,
    DimensionMismatch,
    ConstantTarget,
    EmptyCorpus,
    InvalidConfig,
    SingleClass,
    NonPositiveAlpha,
    TooFewSamples,
    DegenerateFold,
    EmptySpace,
    NegativeFrecency,
    ZeroTotal,
    ModelFormat,
    Io,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every failure in the library surfaces as this exception. `line` is the
// 1-based input line for parse errors; `column` names the offending field or
// feature index where one applies.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail,
          std::optional<std::size_t> line = std::nullopt,
          std::optional<std::string> column = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }
    std::optional<std::size_t> line() const noexcept { return line_; }
    const std::optional<std::string>& column() const noexcept { return column_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
    std::optional<std::string> column_;
};

}  // namespace frecency

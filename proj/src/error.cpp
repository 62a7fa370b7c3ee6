#include "frecency/error.hpp"

namespace frecency {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MissingHeader: return "MissingHeader";
        case ErrorKind::MalformedRow: return "MalformedRow";
        case ErrorKind::BadNumber: return "BadNumber";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::MixedTargets: return "MixedTargets";
        case ErrorKind::InvalidEvent: return "InvalidEvent";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::TooFewRows: return "TooFewRows";
        case ErrorKind::ConstantFeature: return "ConstantFeature";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ConstantTarget: return "ConstantTarget";
        case ErrorKind::EmptyCorpus: return "EmptyCorpus";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::SingleClass: return "SingleClass";
        case ErrorKind::NonPositiveAlpha: return "NonPositiveAlpha";
        case ErrorKind::TooFewSamples: return "TooFewSamples";
        case ErrorKind::DegenerateFold: return "DegenerateFold";
        case ErrorKind::EmptySpace: return "EmptySpace";
        case ErrorKind::NegativeFrecency: return "NegativeFrecency";
        case ErrorKind::ZeroTotal: return "ZeroTotal";
        case ErrorKind::ModelFormat: return "ModelFormat";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail, std::optional<std::size_t> line,
                    const std::optional<std::string>& column) {
    std::string out{error_name(kind)};
    if (line) out += "(line " + std::to_string(*line);
    if (column) out += (line ? ", " : "(") + std::string("column ") + *column;
    if (line || column) out += ")";
    if (!detail.empty()) out += ": " + detail;
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail, std::optional<std::size_t> line,
             std::optional<std::string> column)
    : std::runtime_error(compose(kind, detail, line, column)),
      kind_(kind),
      line_(line),
      column_(std::move(column)) {}

}  // namespace frecency

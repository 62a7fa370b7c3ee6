#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frecency {

inline constexpr std::string_view kHistoryHeader = "url,first_visit,last_visit,visit_count,frecency";

struct HistoryRecord {
    std::string url;
    std::int64_t first_visit = 0;  // Unix seconds
    std::int64_t last_visit = 0;   // Unix seconds
    std::int64_t visit_count = 1;
    std::optional<double> frecency;

    friend bool operator==(const HistoryRecord&, const HistoryRecord&) = default;
};

inline constexpr std::size_t kFeatureCount = 3;
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureOrder = {
    "first_visit", "last_visit", "visit_count"};

// Dense row-major n x 3 design in the fixed order of kFeatureOrder.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = kFeatureCount;
    std::vector<double> features;
    std::optional<std::vector<double>> targets;

    double at(std::size_t row, std::size_t col) const { return features[row * cols + col]; }
    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(features).subspan(r * cols, cols);
    }
};

// Throws Error(MissingHeader | MalformedRow | BadNumber | InvariantViolation).
std::vector<HistoryRecord> parse_history(std::string_view csv_text);

std::string serialize_history(std::span<const HistoryRecord> records);

// Throws Error(EmptyInput | MixedTargets).
FeatureMatrix to_feature_matrix(std::span<const HistoryRecord> records);

// Builds a FeatureMatrix from arbitrary-width rows; used for generic fits.
FeatureMatrix make_feature_matrix(const std::vector<std::vector<double>>& rows,
                                  std::optional<std::vector<double>> targets = std::nullopt);

}  // namespace frecency

#include "frecency/history.hpp"

#include "frecency/csv.hpp"
#include "frecency/error.hpp"

namespace frecency {

namespace {

std::int64_t parse_int_field(std::string_view field, std::size_t line, const char* column) {
    std::int64_t value = 0;
    if (!csv::parse_int(csv::trim(field), value)) {
        throw Error(ErrorKind::BadNumber, "expected an integer, got '" + std::string(field) + "'",
                    line, column);
    }
    return value;
}

}  // namespace

std::vector<HistoryRecord> parse_history(std::string_view csv_text) {
    const auto lines = csv::split_lines(csv_text);
    if (lines.empty() || lines.front().text != kHistoryHeader) {
        throw Error(ErrorKind::MissingHeader,
                    "first line must be '" + std::string(kHistoryHeader) + "'", 1);
    }

    std::vector<HistoryRecord> records;
    records.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [line_no, text] = lines[i];
        const auto fields = csv::split_fields(text);
        if (fields.size() != 5) {
            throw Error(ErrorKind::MalformedRow,
                        "expected 5 fields, found " + std::to_string(fields.size()), line_no);
        }

        HistoryRecord rec;
        rec.url = std::string(fields[0]);
        rec.first_visit = parse_int_field(fields[1], line_no, "first_visit");
        rec.last_visit = parse_int_field(fields[2], line_no, "last_visit");
        rec.visit_count = parse_int_field(fields[3], line_no, "visit_count");

        const auto frecency_field = csv::trim(fields[4]);
        if (!frecency_field.empty()) {
            double value = 0.0;
            if (!csv::parse_real(frecency_field, value)) {
                throw Error(ErrorKind::BadNumber,
                            "expected a real, got '" + std::string(frecency_field) + "'", line_no,
                            "frecency");
            }
            rec.frecency = value;
        }

        if (csv::trim(rec.url).empty()) {
            throw Error(ErrorKind::InvariantViolation, "empty url", line_no);
        }
        if (rec.last_visit < rec.first_visit) {
            throw Error(ErrorKind::InvariantViolation, "last_visit precedes first_visit", line_no);
        }
        if (rec.visit_count < 1) {
            throw Error(ErrorKind::InvariantViolation, "visit_count must be >= 1", line_no);
        }
        if (rec.frecency && *rec.frecency < 0.0) {
            throw Error(ErrorKind::InvariantViolation, "frecency must be non-negative", line_no);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string serialize_history(std::span<const HistoryRecord> records) {
    std::string out{kHistoryHeader};
    out += '\n';
    for (const auto& r : records) {
        out += r.url;
        out += ',';
        out += std::to_string(r.first_visit);
        out += ',';
        out += std::to_string(r.last_visit);
        out += ',';
        out += std::to_string(r.visit_count);
        out += ',';
        if (r.frecency) out += csv::format_real(*r.frecency);
        out += '\n';
    }
    return out;
}

FeatureMatrix to_feature_matrix(std::span<const HistoryRecord> records) {
    if (records.empty()) throw Error(ErrorKind::EmptyInput, "no history records");

    std::size_t with_target = 0;
    for (const auto& r : records) with_target += r.frecency.has_value() ? 1 : 0;
    if (with_target != 0 && with_target != records.size()) {
        throw Error(ErrorKind::MixedTargets, std::to_string(with_target) + " of " +
                                                 std::to_string(records.size()) +
                                                 " records carry a frecency");
    }

    FeatureMatrix m;
    m.rows = records.size();
    m.features.reserve(m.rows * kFeatureCount);
    for (const auto& r : records) {
        m.features.push_back(static_cast<double>(r.first_visit));
        m.features.push_back(static_cast<double>(r.last_visit));
        m.features.push_back(static_cast<double>(r.visit_count));
    }
    if (with_target == records.size()) {
        std::vector<double> y;
        y.reserve(records.size());
        for (const auto& r : records) y.push_back(*r.frecency);
        m.targets = std::move(y);
    }
    return m;
}

FeatureMatrix make_feature_matrix(const std::vector<std::vector<double>>& rows,
                                  std::optional<std::vector<double>> targets) {
    FeatureMatrix m;
    m.rows = rows.size();
    m.cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != m.cols) throw Error(ErrorKind::DimensionMismatch, "ragged feature rows");
        m.features.insert(m.features.end(), row.begin(), row.end());
    }
    if (targets && targets->size() != m.rows) {
        throw Error(ErrorKind::DimensionMismatch, "target count differs from row count");
    }
    m.targets = std::move(targets);
    return m;
}

}  // namespace frecency

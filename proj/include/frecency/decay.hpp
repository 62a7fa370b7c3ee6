#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frecency/history.hpp"

// Explicit exponential-decay frecency: each visit is worth its points decayed
// with a 30 day half-life, and a URL's score is the sum over its visits.
namespace frecency {

inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kHalfLifeDays = 30.0;
inline constexpr double kDefaultPointsPerVisit = 100.0;

struct VisitEvent {
    double points = kDefaultPointsPerVisit;  // > 0
    double age_days = 0.0;                   // >= 0
};

// ln(2) / 30, per day.
double decay_constant();

// points * exp(-decay_constant() * age_days). Throws Error(InvalidEvent).
double visit_value(const VisitEvent& event);

// Sum of visit_value over events; 0 for an empty list.
double frecency_score(std::span<const VisitEvent> events);

inline double age_in_days(std::int64_t reference_time, std::int64_t visit_time) {
    return static_cast<double>(reference_time - visit_time) / kSecondsPerDay;
}

struct SynthOptions {
    double points_per_visit = kDefaultPointsPerVisit;
    std::int64_t max_visits = 200;   // visit counts are log-uniform in [1, max_visits]
    double max_span_days = 90.0;     // last_visit - first_visit, uniform in [0, max]
    double recency_window_days = 30.0;
    std::int64_t reference_time = 1522368000;  // 2018-03-30T00:00:00Z
};

// Synthetic history with ground-truth frecency. A record with c visits places
// them evenly between ages 0 and (last_visit - first_visit) days and scores
// them with frecency_score. Deterministic in seed.
std::vector<HistoryRecord> synth_history(std::size_t n, std::uint64_t seed,
                                         const SynthOptions& options = {});

}  // namespace frecency

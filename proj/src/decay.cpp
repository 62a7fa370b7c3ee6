#include "frecency/decay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "frecency/error.hpp"
#include "frecency/rng.hpp"

namespace frecency {

double decay_constant() { return std::numbers::ln2 / kHalfLifeDays; }

double visit_value(const VisitEvent& event) {
    if (!(event.points > 0.0) || !std::isfinite(event.points)) {
        throw Error(ErrorKind::InvalidEvent, "points must be positive");
    }
    if (!(event.age_days >= 0.0) || !std::isfinite(event.age_days)) {
        throw Error(ErrorKind::InvalidEvent, "age must be non-negative");
    }
    return event.points * std::exp(-decay_constant() * event.age_days);
}

double frecency_score(std::span<const VisitEvent> events) {
    double total = 0.0;
    for (const auto& e : events) total += visit_value(e);
    return total;
}

namespace {

constexpr std::array kHosts = {
    "web.facebook.com", "mail.google.com",   "github.com",        "www.youtube.com",
    "localhost",        "drive.google.com",  "codeforces.com",    "www.kaggle.com",
    "www.floydhub.com", "www.cricbuzz.com",  "stackoverflow.com", "news.ycombinator.com",
    "www.reddit.com",   "en.wikipedia.org",  "docs.python.org",   "www.linkedin.com",
    "twitter.com",      "www.amazon.com",    "www.netflix.com",   "medium.com",
};

constexpr std::array kPaths = {
    "",       "home",   "inbox",   "tree",    "contests", "jobs",   "watch",  "wiki",
    "search", "issues", "profile", "settings", "feed",    "docs",   "live",   "pulls",
};

}  // namespace

std::vector<HistoryRecord> synth_history(std::size_t n, std::uint64_t seed,
                                         const SynthOptions& options) {
    auto engine = rng::make_engine(seed);
    const double log_max_visits = std::log(static_cast<double>(options.max_visits) + 1.0);

    std::vector<HistoryRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        HistoryRecord rec;
        const auto host = kHosts[rng::uniform_index(engine, kHosts.size())];
        const auto path = kPaths[rng::uniform_index(engine, kPaths.size())];
        rec.url = std::string("https://") + host + "/" + path;
        if (*path != '\0') rec.url += "/" + std::to_string(i);

        const auto visits = static_cast<std::int64_t>(
            std::floor(std::exp(rng::uniform_unit(engine) * log_max_visits)));
        rec.visit_count = std::clamp<std::int64_t>(visits, 1, options.max_visits);

        const double recency_days = rng::uniform_real(engine, 0.0, options.recency_window_days);
        const double span_days = rng::uniform_real(engine, 0.0, options.max_span_days);
        rec.last_visit = options.reference_time -
                         static_cast<std::int64_t>(std::llround(recency_days * kSecondsPerDay));
        rec.first_visit =
            rec.last_visit - static_cast<std::int64_t>(std::llround(span_days * kSecondsPerDay));

        const double span = age_in_days(rec.last_visit, rec.first_visit);
        std::vector<VisitEvent> events(static_cast<std::size_t>(rec.visit_count));
        for (std::size_t v = 0; v < events.size(); ++v) {
            events[v].points = options.points_per_visit;
            events[v].age_days =
                events.size() == 1 ? 0.0 : span * static_cast<double>(v) / (events.size() - 1);
        }
        rec.frecency = frecency_score(events);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace frecency

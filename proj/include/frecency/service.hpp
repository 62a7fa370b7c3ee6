#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "frecency/history.hpp"
#include "frecency/link_predictor.hpp"
#include "frecency/recommender.hpp"
#include "frecency/regression.hpp"
#include "frecency/url_classifier.hpp"

namespace httplib {
class Server;
}

namespace frecency {

inline constexpr int kDefaultPort = 8099;
inline constexpr std::size_t kDefaultPredictK = 10;
inline constexpr std::size_t kDefaultRecommendK = 3;

// Predicts frecency (clamped at zero) and category for every history row.
std::vector<CategorizedLink> score_history(std::span<const HistoryRecord> records,
                                           const LinearModel& frecency_model,
                                           const MnbModel& classifier);

std::vector<ScoredLink> to_scored_links(std::span<const CategorizedLink> links);

struct ModelSnapshot {
    LinearModel linear_model;
    MnbModel mnb_model;
    std::vector<CategorizedLink> scored_history;
    Catalog catalog;
    std::chrono::system_clock::time_point loaded_at = std::chrono::system_clock::now();

    // Derived at construction by make_snapshot.
    std::vector<ScoredLink> links;
    std::unordered_set<std::string> visited;
};

std::shared_ptr<const ModelSnapshot> make_snapshot(LinearModel linear_model, MnbModel mnb_model,
                                                   std::vector<CategorizedLink> scored_history,
                                                   Catalog catalog);

struct Response {
    int status = 200;
    std::string body;
};

// Read-only JSON API over one immutable snapshot. Handlers are pure functions
// of (snapshot, request) and may run concurrently.
class Service {
public:
    void load(std::shared_ptr<const ModelSnapshot> snapshot);
    std::shared_ptr<const ModelSnapshot> snapshot() const;

    // GET /api/predict?q=&k=
    Response predict(const std::optional<std::string>& q, const std::optional<std::string>& k) const;
    // POST /api/classify {"urls": [...]}
    Response classify(const std::string& body) const;
    // GET /api/recommendations?k=
    Response recommendations(const std::optional<std::string>& k) const;

    // Registers the three endpoints plus CORS headers on server.
    void bind(httplib::Server& server) const;

private:
    mutable std::mutex mutex_;
    std::shared_ptr<const ModelSnapshot> snapshot_;
};

// Blocks serving on 127.0.0.1:port until the server is stopped.
bool serve(const Service& service, int port);

}  // namespace frecency

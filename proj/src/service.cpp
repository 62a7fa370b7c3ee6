#include "frecency/service.hpp"

#include <algorithm>
#include <cstdint>

#include <httplib.h>
#include <json.hpp>

#include "frecency/csv.hpp"

namespace frecency {

using nlohmann::ordered_json;

std::vector<CategorizedLink> score_history(std::span<const HistoryRecord> records,
                                           const LinearModel& frecency_model,
                                           const MnbModel& classifier) {
    std::vector<CategorizedLink> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        const std::array<double, kFeatureCount> x = {static_cast<double>(r.first_visit),
                                                     static_cast<double>(r.last_visit),
                                                     static_cast<double>(r.visit_count)};
        const double predicted = std::max(0.0, predict(frecency_model, x));
        out.push_back({r.url, r.visit_count, predicted, predict_mnb(classifier, r.url).category});
    }
    return out;
}

std::vector<ScoredLink> to_scored_links(std::span<const CategorizedLink> links) {
    std::vector<ScoredLink> out;
    out.reserve(links.size());
    for (const auto& l : links) out.push_back({l.url, l.visit_count, l.frecency});
    return out;
}

std::shared_ptr<const ModelSnapshot> make_snapshot(LinearModel linear_model, MnbModel mnb_model,
                                                   std::vector<CategorizedLink> scored_history,
                                                   Catalog catalog) {
    auto snap = std::make_shared<ModelSnapshot>();
    snap->linear_model = std::move(linear_model);
    snap->mnb_model = std::move(mnb_model);
    snap->scored_history = std::move(scored_history);
    snap->catalog = std::move(catalog);
    snap->links = to_scored_links(snap->scored_history);
    for (const auto& l : snap->scored_history) snap->visited.insert(l.url);
    return snap;
}

namespace {

Response json_response(int status, const ordered_json& body) { return {status, body.dump()}; }

Response error_response(int status, const std::string& message) {
    return json_response(status, ordered_json{{"error", message}});
}

Response not_loaded() { return error_response(503, "model snapshot not loaded"); }

// Parses a non-negative decimal count; nullopt on anything else.
std::optional<std::size_t> parse_count(const std::string& text) {
    std::int64_t value = 0;
    if (!csv::parse_int(text, value) || value < 0) return std::nullopt;
    return static_cast<std::size_t>(value);
}

}  // namespace

void Service::load(std::shared_ptr<const ModelSnapshot> snapshot) {
    std::lock_guard lock(mutex_);
    snapshot_ = std::move(snapshot);
}

std::shared_ptr<const ModelSnapshot> Service::snapshot() const {
    std::lock_guard lock(mutex_);
    return snapshot_;
}

Response Service::predict(const std::optional<std::string>& q,
                          const std::optional<std::string>& k) const {
    const auto snap = snapshot();
    if (!snap) return not_loaded();

    std::size_t limit = kDefaultPredictK;
    if (k) {
        const auto parsed = parse_count(*k);
        if (!parsed || *parsed == 0) return error_response(400, "k must be a positive integer");
        limit = *parsed;
    }
    const std::string query = q.value_or("");
    ordered_json links = ordered_json::array();
    for (const auto& link : predict_links(query, snap->links, limit)) {
        links.push_back({{"url", link.url},
                         {"visit_count", link.visit_count},
                         {"frecency", link.frecency}});
    }
    return json_response(200, ordered_json{{"query", query}, {"links", std::move(links)}});
}

Response Service::classify(const std::string& body) const {
    const auto snap = snapshot();
    if (!snap) return not_loaded();

    ordered_json request;
    try {
        request = ordered_json::parse(body);
    } catch (const ordered_json::exception&) {
        return error_response(400, "body is not valid JSON");
    }
    if (!request.is_object() || !request.contains("urls") || !request.at("urls").is_array()) {
        return error_response(400, "body must be an object with a 'urls' array");
    }
    const auto& urls = request.at("urls");
    for (const auto& u : urls) {
        if (!u.is_string()) return error_response(400, "'urls' must contain only strings");
    }
    if (urls.empty()) return error_response(422, "'urls' is empty");

    ordered_json results = ordered_json::array();
    for (const auto& u : urls) {
        const auto url = u.get<std::string>();
        const auto prediction = predict_mnb(snap->mnb_model, url);
        ordered_json scores = ordered_json::object();
        for (std::size_t c = 0; c < snap->mnb_model.class_count(); ++c) {
            scores[snap->mnb_model.class_labels[c]] = prediction.log_scores[c];
        }
        results.push_back(
            {{"url", url}, {"category", prediction.category}, {"scores", std::move(scores)}});
    }
    return json_response(200, ordered_json{{"results", std::move(results)}});
}

Response Service::recommendations(const std::optional<std::string>& k) const {
    const auto snap = snapshot();
    if (!snap) return not_loaded();

    std::size_t per_category = kDefaultRecommendK;
    if (k) {
        const auto parsed = parse_count(*k);
        if (!parsed) return error_response(400, "k must be a non-negative integer");
        per_category = *parsed;
    }

    ordered_json ranking_json = ordered_json::array();
    ordered_json recs_json = ordered_json::array();
    if (!snap->scored_history.empty()) {
        double total = 0.0;
        for (const auto& l : snap->scored_history) total += l.frecency;
        if (total > 0.0) {
            const auto ranking =
                rank_categories(category_probabilities(category_totals(snap->scored_history)));
            for (const auto& s : ranking) {
                ranking_json.push_back({{"category", s.category}, {"probability", s.probability}});
            }
            for (const auto& r : recommend(ranking, snap->catalog, snap->visited, per_category)) {
                recs_json.push_back({{"category", r.category}, {"urls", r.urls}});
            }
        }
    }
    return json_response(200, ordered_json{{"ranking", std::move(ranking_json)},
                                           {"recommendations", std::move(recs_json)}});
}

void Service::bind(httplib::Server& server) const {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

    auto param = [](const httplib::Request& req, const char* name) -> std::optional<std::string> {
        if (!req.has_param(name)) return std::nullopt;
        return req.get_param_value(name);
    };
    auto send = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };

    server.Get("/api/predict", [this, param, send](const httplib::Request& req, httplib::Response& res) {
        send(res, predict(param(req, "q"), param(req, "k")));
    });
    server.Post("/api/classify", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, classify(req.body));
    });
    server.Get("/api/recommendations",
               [this, param, send](const httplib::Request& req, httplib::Response& res) {
                   send(res, recommendations(param(req, "k")));
               });
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

bool serve(const Service& service, int port) {
    httplib::Server server;
    service.bind(server);
    return server.listen("127.0.0.1", port);
}

}  // namespace frecency

#include "frecency/recommender.hpp"

#include <algorithm>
#include <map>

#include "frecency/csv.hpp"
#include "frecency/error.hpp"

namespace frecency {

void Catalog::add(const std::string& category, const std::string& url) {
    auto it = std::find(order_.begin(), order_.end(), category);
    std::size_t idx = static_cast<std::size_t>(it - order_.begin());
    if (it == order_.end()) {
        order_.push_back(category);
        urls_.emplace_back();
    }
    auto& list = urls_[idx];
    if (std::find(list.begin(), list.end(), url) == list.end()) list.push_back(url);
}

std::span<const std::string> Catalog::urls(std::string_view category) const {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (order_[i] == category) return urls_[i];
    }
    return {};
}

Catalog parse_catalog(std::string_view csv_text) {
    const auto lines = csv::split_lines(csv_text);
    if (lines.empty() || lines.front().text != kCatalogHeader) {
        throw Error(ErrorKind::MissingHeader,
                    "first line must be '" + std::string(kCatalogHeader) + "'", 1);
    }
    Catalog catalog;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = csv::split_fields(lines[i].text);
        if (fields.size() != 2) {
            throw Error(ErrorKind::MalformedRow,
                        "expected 2 fields, found " + std::to_string(fields.size()),
                        lines[i].number);
        }
        const auto category = csv::trim(fields[0]);
        const auto url = csv::trim(fields[1]);
        if (category.empty() || url.empty()) {
            throw Error(ErrorKind::InvariantViolation, "empty category or url", lines[i].number);
        }
        catalog.add(std::string(category), std::string(url));
    }
    return catalog;
}

std::vector<CategoryScore> category_totals(std::span<const CategorizedLink> links) {
    if (links.empty()) throw Error(ErrorKind::EmptyInput, "no links to aggregate");
    std::vector<CategoryScore> totals;
    std::map<std::string, std::size_t> index;
    for (const auto& link : links) {
        if (!(link.frecency >= 0.0)) {
            throw Error(ErrorKind::NegativeFrecency, "negative frecency for " + link.url);
        }
        auto [it, inserted] = index.try_emplace(link.category, totals.size());
        if (inserted) totals.push_back({link.category, 0.0, 0, 0.0});
        auto& entry = totals[it->second];
        entry.total_frecency += link.frecency;
        entry.total_visits += link.visit_count;
    }
    return totals;
}

std::vector<CategoryScore> category_probabilities(std::vector<CategoryScore> totals) {
    double sum = 0.0;
    for (const auto& t : totals) sum += t.total_frecency;
    if (!(sum > 0.0)) throw Error(ErrorKind::ZeroTotal, "category totals sum to zero");
    for (auto& t : totals) t.probability = t.total_frecency / sum;
    return totals;
}

std::vector<CategoryScore> rank_categories(std::vector<CategoryScore> scores) {
    std::sort(scores.begin(), scores.end(), [](const CategoryScore& a, const CategoryScore& b) {
        if (a.probability != b.probability) return a.probability > b.probability;
        return a.category < b.category;
    });
    return scores;
}

std::vector<Recommendation> recommend(std::span<const CategoryScore> ranking,
                                      const Catalog& catalog,
                                      const std::unordered_set<std::string>& visited,
                                      std::size_t k_per_category) {
    std::vector<Recommendation> out;
    out.reserve(ranking.size());
    for (const auto& score : ranking) {
        Recommendation rec{score.category, {}};
        for (const auto& url : catalog.urls(score.category)) {
            if (rec.urls.size() >= k_per_category) break;
            if (!visited.contains(url)) rec.urls.push_back(url);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace frecency

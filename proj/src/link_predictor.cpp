#include "frecency/link_predictor.hpp"

#include <algorithm>
#include <cctype>

namespace frecency {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

bool link_order(const ScoredLink& a, const ScoredLink& b) {
    if (a.frecency != b.frecency) return a.frecency > b.frecency;
    if (a.visit_count != b.visit_count) return a.visit_count > b.visit_count;
    return a.url < b.url;
}

std::string normalize_for_match(std::string_view url) {
    std::string lowered = to_lower(url);
    for (std::string_view scheme : {"http://", "https://"}) {
        if (lowered.starts_with(scheme)) return lowered.substr(scheme.size());
    }
    return lowered;
}

std::vector<ScoredLink> predict_links(std::string_view query, std::span<const ScoredLink> history,
                                      std::size_t k) {
    const std::string needle = to_lower(query);
    std::vector<ScoredLink> matches;
    for (const auto& link : history) {
        if (needle.empty() || normalize_for_match(link.url).find(needle) != std::string::npos) {
            matches.push_back(link);
        }
    }
    const std::size_t keep = std::min(k, matches.size());
    std::partial_sort(matches.begin(), matches.begin() + static_cast<std::ptrdiff_t>(keep),
                      matches.end(), link_order);
    matches.resize(keep);
    return matches;
}

}  // namespace frecency

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frecency {

struct ScoredLink {
    std::string url;
    std::int64_t visit_count = 0;
    double frecency = 0.0;  // predicted

    friend bool operator==(const ScoredLink&, const ScoredLink&) = default;
};

// Frecency descending, then visit_count descending, then URL ascending.
bool link_order(const ScoredLink& a, const ScoredLink& b);

// Lowercased URL with a leading "http://" or "https://" removed.
std::string normalize_for_match(std::string_view url);

// Up to k links whose normalized URL contains the lowercased query, best
// first. An empty query matches every link.
std::vector<ScoredLink> predict_links(std::string_view query, std::span<const ScoredLink> history,
                                      std::size_t k);

}  // namespace frecency

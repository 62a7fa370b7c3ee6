#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace frecency {

inline constexpr std::string_view kCatalogHeader = "category,url";

struct CategorizedLink {
    std::string url;
    std::int64_t visit_count = 0;
    double frecency = 0.0;  // predicted
    std::string category;
};

struct CategoryScore {
    std::string category;
    double total_frecency = 0.0;
    std::int64_t total_visits = 0;
    double probability = 0.0;
};

// Category name -> recommendation URLs, in file order.
class Catalog {
public:
    // Appends url to category unless it is already listed there.
    void add(const std::string& category, const std::string& url);
    std::span<const std::string> urls(std::string_view category) const;
    const std::vector<std::string>& categories() const { return order_; }

private:
    std::vector<std::string> order_;
    std::vector<std::vector<std::string>> urls_;
};

// Throws Error(MissingHeader | MalformedRow | InvariantViolation).
Catalog parse_catalog(std::string_view csv_text);

// Per-category sums of frecency and visits, in first-seen category order.
// Throws Error(EmptyInput | NegativeFrecency).
std::vector<CategoryScore> category_totals(std::span<const CategorizedLink> links);

// P(T_i) = T_i / sum_j T_j. Throws Error(ZeroTotal).
std::vector<CategoryScore> category_probabilities(std::vector<CategoryScore> totals);

// Probability descending, ties by category name.
std::vector<CategoryScore> rank_categories(std::vector<CategoryScore> scores);

struct Recommendation {
    std::string category;
    std::vector<std::string> urls;
};

std::vector<Recommendation> recommend(std::span<const CategoryScore> ranking,
                                      const Catalog& catalog,
                                      const std::unordered_set<std::string>& visited,
                                      std::size_t k_per_category);

}  // namespace frecency

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frecency/error.hpp"
#include "frecency/rng.hpp"
#include "frecency/url_classifier.hpp"

namespace frecency {

struct HyperParams {
    int ngram_lo = 1;
    int ngram_hi = 1;
    bool use_idf = false;
    double alpha = 1.0;

    VectorizerConfig config() const { return {ngram_lo, ngram_hi, use_idf}; }
    friend bool operator==(const HyperParams&, const HyperParams&) = default;
};

std::string to_string(const HyperParams& params);

inline const std::vector<double> kDefaultAlphas = {0.01, 0.001};

// Grid ngram range {(1,1),(1,2)} x use_idf {true,false} x alphas. The default
// is the 8-point grid.
std::vector<HyperParams> default_search_space(const std::vector<double>& alphas = kDefaultAlphas);

struct TrialResult {
    HyperParams params;
    double mean_score = 0.0;  // mean fold accuracy
    double std_score = 0.0;   // population std over the k fold accuracies
    std::vector<double> fold_scores;
};

struct AnnealingSchedule {
    double initial_temp = 1.0;
    double decay = 0.9;

    // T0 * decay^k. Throws Error(InvalidConfig) for an invalid schedule.
    double temperature(std::size_t k) const;
    void validate() const;
};

// k disjoint folds covering 0..n-1 after a seeded shuffle; fold sizes differ
// by at most one and each fold is sorted. Throws Error(TooFewSamples |
// InvalidConfig).
std::vector<std::vector<std::size_t>> kfold_split(std::size_t n, std::size_t k,
                                                  std::uint64_t seed);

// Trains on k-1 folds and scores accuracy on the held-out fold, k times.
// Throws Error(DegenerateFold) when a training split lacks one of the
// dataset's categories.
TrialResult cross_validate(std::span<const LabeledUrl> dataset, const HyperParams& params,
                           std::size_t k, std::uint64_t seed);

// min{1, exp((f_current - f_candidate) / temperature)}
double acceptance_probability(double f_current, double f_candidate, double temperature);

// One uniform draw against acceptance_probability. Always consumes a draw.
bool accept_candidate(rng::Engine& engine, double f_current, double f_candidate,
                      double temperature);

template <typename T>
struct SearchState {
    T current{};
    double current_objective = 0.0;
    T best{};
    double best_objective = 0.0;
    std::size_t iteration = 0;
};

template <typename T>
struct SearchTrial {
    std::size_t iteration = 0;  // 1-based
    T candidate{};
    double objective = 0.0;
    bool accepted = false;
    double current_objective = 0.0;  // f(X_k) after this step's update
};

template <typename T>
struct SearchOutcome {
    SearchState<T> state;
    std::vector<SearchTrial<T>> log;
};

namespace detail {

template <typename T, typename Accept>
SearchOutcome<T> run_search(std::span<const T> space, std::size_t n_iter,
                            const std::function<double(const T&)>& objective, std::uint64_t seed,
                            Accept&& accept) {
    if (space.empty()) throw Error(ErrorKind::EmptySpace, "search space is empty");
    if (n_iter == 0) throw Error(ErrorKind::InvalidConfig, "n_iter must be >= 1");

    auto engine = rng::make_engine(seed);
    SearchOutcome<T> out;
    out.log.reserve(n_iter);
    for (std::size_t i = 1; i <= n_iter; ++i) {
        const T& candidate = space[rng::uniform_index(engine, space.size())];
        const double f = objective(candidate);
        bool accepted = true;
        if (i > 1) accepted = accept(engine, out.state.current_objective, f, i - 1);
        if (accepted) {
            out.state.current = candidate;
            out.state.current_objective = f;
        }
        if (i == 1 || f < out.state.best_objective) {
            out.state.best = candidate;
            out.state.best_objective = f;
        }
        out.state.iteration = i;
        out.log.push_back({i, candidate, f, accepted, out.state.current_objective});
    }
    return out;
}

}  // namespace detail

// Greedy random search: candidates drawn uniformly with replacement; the
// current point moves only on a strict improvement. The first draw seeds the
// state. Throws Error(EmptySpace).
template <typename T>
SearchOutcome<T> random_search(std::span<const T> space, std::size_t n_iter,
                               const std::function<double(const T&)>& objective,
                               std::uint64_t seed) {
    return detail::run_search<T>(space, n_iter, objective, seed,
                                 [](rng::Engine&, double f_current, double f_candidate,
                                    std::size_t) { return f_candidate < f_current; });
}

// Random search with Metropolis acceptance at temperature schedule(k) when
// deciding X_{k+1}. state.best tracks the best point seen regardless of the
// walk.
template <typename T>
SearchOutcome<T> annealed_search(std::span<const T> space, std::size_t n_iter,
                                 const std::function<double(const T&)>& objective,
                                 const AnnealingSchedule& schedule, std::uint64_t seed) {
    schedule.validate();
    return detail::run_search<T>(
        space, n_iter, objective, seed,
        [&schedule](rng::Engine& engine, double f_current, double f_candidate, std::size_t k) {
            return accept_candidate(engine, f_current, f_candidate, schedule.temperature(k));
        });
}

struct TuneTrial {
    std::size_t iteration = 0;
    TrialResult result;
    bool accepted = false;
};

struct TuneReport {
    std::vector<TuneTrial> trials;
    TrialResult best;
};

// Searches the classifier space minimizing 1 - mean CV accuracy. Every
// candidate is scored on the same seeded folds; repeated candidates reuse
// their first evaluation.
TuneReport tune_classifier(std::span<const LabeledUrl> dataset, std::span<const HyperParams> space,
                           std::size_t n_iter, std::size_t folds, std::uint64_t seed,
                           const std::optional<AnnealingSchedule>& schedule = std::nullopt);

inline constexpr std::string_view kTrialHeader =
    "iteration,ngram_lo,ngram_hi,use_idf,alpha,mean,std,accepted";

std::string trials_to_csv(std::span<const TuneTrial> trials);

}  // namespace frecency

namespace frecency {

struct HoldoutSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Seeded shuffle of 0..n-1, then the first round(train_fraction * n) indices
// train and the rest test. Both sides keep at least one index.
// Throws Error(TooFewSamples | InvalidConfig).
HoldoutSplit holdout_split(std::size_t n, double train_fraction, std::uint64_t seed);

}  // namespace frecency

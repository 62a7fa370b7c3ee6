#include "frecency/hyper_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "frecency/csv.hpp"

namespace frecency {

std::string to_string(const HyperParams& p) {
    return "((" + std::to_string(p.ngram_lo) + "," + std::to_string(p.ngram_hi) + "), " +
           (p.use_idf ? "true" : "false") + ", " + csv::format_real(p.alpha) + ")";
}

std::vector<HyperParams> default_search_space(const std::vector<double>& alphas) {
    std::vector<HyperParams> space;
    for (double alpha : alphas) {
        for (bool use_idf : {true, false}) {
            for (int hi : {1, 2}) space.push_back({1, hi, use_idf, alpha});
        }
    }
    return space;
}

double AnnealingSchedule::temperature(std::size_t k) const {
    validate();
    return initial_temp * std::pow(decay, static_cast<double>(k));
}

void AnnealingSchedule::validate() const {
    if (!(initial_temp > 0.0) || !std::isfinite(initial_temp)) {
        throw Error(ErrorKind::InvalidConfig, "initial temperature must be positive");
    }
    if (!(decay > 0.0 && decay < 1.0)) {
        throw Error(ErrorKind::InvalidConfig, "decay must lie in (0, 1)");
    }
}

std::vector<std::vector<std::size_t>> kfold_split(std::size_t n, std::size_t k,
                                                  std::uint64_t seed) {
    if (k < 2) throw Error(ErrorKind::InvalidConfig, "k must be >= 2");
    if (n < k) {
        throw Error(ErrorKind::TooFewSamples,
                    std::to_string(n) + " samples for " + std::to_string(k) + " folds");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto engine = rng::make_engine(seed);
    rng::shuffle(std::span<std::size_t>(order), engine);

    std::vector<std::vector<std::size_t>> folds(k);
    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = n / k + (f < n % k ? 1 : 0);
        folds[f].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                        order.begin() + static_cast<std::ptrdiff_t>(pos + size));
        std::sort(folds[f].begin(), folds[f].end());
        pos += size;
    }
    return folds;
}

TrialResult cross_validate(std::span<const LabeledUrl> dataset, const HyperParams& params,
                           std::size_t k, std::uint64_t seed) {
    const auto folds = kfold_split(dataset.size(), k, seed);
    std::set<std::string> categories;
    for (const auto& doc : dataset) categories.insert(doc.category);

    TrialResult result;
    result.params = params;
    std::vector<bool> held_out(dataset.size());
    for (std::size_t f = 0; f < folds.size(); ++f) {
        std::fill(held_out.begin(), held_out.end(), false);
        for (auto i : folds[f]) held_out[i] = true;

        std::vector<LabeledUrl> train;
        std::set<std::string> train_categories;
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            if (held_out[i]) continue;
            train.push_back(dataset[i]);
            train_categories.insert(dataset[i].category);
        }
        if (train_categories.size() != categories.size() || categories.size() < 2) {
            throw Error(ErrorKind::DegenerateFold,
                        "training split for fold " + std::to_string(f) + " lacks a category");
        }

        const auto model = train_classifier(train, params.config(), params.alpha);
        std::vector<std::string> truth, predicted;
        for (auto i : folds[f]) {
            truth.push_back(dataset[i].category);
            predicted.push_back(predict_mnb(model, dataset[i].url).category);
        }
        result.fold_scores.push_back(accuracy(truth, predicted));
    }

    const double kf = static_cast<double>(result.fold_scores.size());
    result.mean_score =
        std::accumulate(result.fold_scores.begin(), result.fold_scores.end(), 0.0) / kf;
    double var = 0.0;
    for (double s : result.fold_scores) var += (s - result.mean_score) * (s - result.mean_score);
    result.std_score = std::sqrt(var / kf);
    return result;
}

double acceptance_probability(double f_current, double f_candidate, double temperature) {
    if (f_candidate <= f_current) return 1.0;
    return std::exp((f_current - f_candidate) / temperature);
}

bool accept_candidate(rng::Engine& engine, double f_current, double f_candidate,
                      double temperature) {
    const double u = rng::uniform_unit(engine);
    return u < acceptance_probability(f_current, f_candidate, temperature);
}

TuneReport tune_classifier(std::span<const LabeledUrl> dataset, std::span<const HyperParams> space,
                           std::size_t n_iter, std::size_t folds, std::uint64_t seed,
                           const std::optional<AnnealingSchedule>& schedule) {
    std::vector<TrialResult> evaluated;
    auto lookup = [&](const HyperParams& p) -> const TrialResult& {
        for (const auto& r : evaluated) {
            if (r.params == p) return r;
        }
        evaluated.push_back(cross_validate(dataset, p, folds, seed));
        return evaluated.back();
    };
    const std::function<double(const HyperParams&)> objective = [&](const HyperParams& p) {
        return 1.0 - lookup(p).mean_score;
    };

    const auto outcome = schedule ? annealed_search(space, n_iter, objective, *schedule, seed)
                                  : random_search(space, n_iter, objective, seed);

    TuneReport report;
    for (const auto& t : outcome.log) report.trials.push_back({t.iteration, lookup(t.candidate), t.accepted});
    report.best = lookup(outcome.state.best);
    return report;
}

std::string trials_to_csv(std::span<const TuneTrial> trials) {
    std::string out{kTrialHeader};
    out += '\n';
    for (const auto& t : trials) {
        const auto& p = t.result.params;
        out += std::to_string(t.iteration) + ',' + std::to_string(p.ngram_lo) + ',' +
               std::to_string(p.ngram_hi) + ',' + (p.use_idf ? "true" : "false") + ',' +
               csv::format_real(p.alpha) + ',' + csv::format_real(t.result.mean_score) + ',' +
               csv::format_real(t.result.std_score) + ',' + (t.accepted ? "true" : "false") + '\n';
    }
    return out;
}

}  // namespace frecency

namespace frecency {

HoldoutSplit holdout_split(std::size_t n, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw Error(ErrorKind::InvalidConfig, "train fraction must lie in (0, 1)");
    }
    if (n < 2) throw Error(ErrorKind::TooFewSamples, "holdout split needs at least 2 samples");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto engine = rng::make_engine(seed);
    rng::shuffle(std::span<std::size_t>(order), engine);

    auto cut = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
    cut = std::clamp<std::size_t>(cut, 1, n - 1);
    HoldoutSplit split;
    split.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut));
    split.test.assign(order.begin() + static_cast<std::ptrdiff_t>(cut), order.end());
    return split;
}

}  // namespace frecency

// Command-line driver: synthesize and ingest history, train and evaluate the
// frecency regressor and URL classifier, tune, rank, recommend, and serve.
//
// Exit codes: 0 success, 1 usage error, 2 data or model error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>

#include "frecency/csv.hpp"
#include "frecency/decay.hpp"
#include "frecency/error.hpp"
#include "frecency/history.hpp"
#include "frecency/hyper_search.hpp"
#include "frecency/model_io.hpp"
#include "frecency/recommender.hpp"
#include "frecency/regression.hpp"
#include "frecency/service.hpp"
#include "frecency/url_classifier.hpp"

namespace {

using nlohmann::ordered_json;
namespace fr = frecency;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        fr::write_text_file(out_path, text);
    }
}

ordered_json metrics_json(const fr::RegressionMetrics& m) {
    return {{"mse", m.mse}, {"rmse", m.rmse}, {"r2", m.r2}};
}

fr::VectorizerConfig parse_ngram(const std::string& text) {
    const auto fields = fr::csv::split_fields(text);
    std::int64_t lo = 0, hi = 0;
    if (fields.size() != 2 || !fr::csv::parse_int(fr::csv::trim(fields[0]), lo) ||
        !fr::csv::parse_int(fr::csv::trim(fields[1]), hi) || lo < 1 || hi < lo) {
        throw UsageError("--ngram expects '<lo>,<hi>' with 1 <= lo <= hi");
    }
    return {static_cast<int>(lo), static_cast<int>(hi), false};
}

std::vector<fr::CategorizedLink> load_scored_history(const std::string& history_path,
                                                     const std::string& frecency_model_path,
                                                     const std::string& classifier_path) {
    const auto records = fr::parse_history(fr::read_text_file(history_path));
    const auto linear = fr::linear_model_from_json(fr::read_text_file(frecency_model_path));
    const auto mnb = fr::mnb_model_from_json(fr::read_text_file(classifier_path));
    return fr::score_history(records, linear, mnb);
}

std::vector<fr::CategoryScore> ranking_of(const std::vector<fr::CategorizedLink>& links) {
    return fr::rank_categories(fr::category_probabilities(fr::category_totals(links)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frecency prediction, URL classification and recommendation"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Write a synthetic history CSV with ground-truth frecency");
    std::size_t synth_n = 0;
    std::uint64_t synth_seed = 0;
    double synth_points = fr::kDefaultPointsPerVisit;
    std::string synth_out;
    synth->add_option("--n", synth_n, "Number of records")->required()->check(CLI::PositiveNumber);
    synth->add_option("--seed", synth_seed, "Random seed")->required();
    synth->add_option("--points", synth_points, "Points per visit")->check(CLI::PositiveNumber);
    synth->add_option("--out", synth_out, "Output path (default: stdout)");

    // train-frecency / eval-frecency
    auto* train_frecency = app.add_subcommand("train-frecency", "Fit the frecency regressor");
    std::string tf_history, tf_model_out;
    train_frecency->add_option("--history", tf_history, "History CSV")->required();
    train_frecency->add_option("--model-out", tf_model_out, "Model JSON output path")->required();

    auto* eval_frecency = app.add_subcommand("eval-frecency", "Score a frecency model on held-out history");
    std::string ef_history, ef_model;
    eval_frecency->add_option("--history", ef_history, "History CSV with frecency")->required();
    eval_frecency->add_option("--model", ef_model, "Model JSON")->required();

    // train-classifier
    auto* train_classifier = app.add_subcommand("train-classifier", "Train the URL classifier on a 70/30 split");
    std::string tc_labels, tc_ngram = "1,1", tc_model_out;
    bool tc_use_idf = false;
    double tc_alpha = 1.0;
    std::uint64_t tc_seed = 0;
    train_classifier->add_option("--labels", tc_labels, "Label CSV (url,category)")->required();
    train_classifier->add_option("--ngram", tc_ngram, "N-gram range lo,hi")->capture_default_str();
    train_classifier->add_option("--use-idf", tc_use_idf, "Apply TF-IDF weighting")->capture_default_str();
    train_classifier->add_option("--alpha", tc_alpha, "Additive smoothing")->capture_default_str();
    train_classifier->add_option("--model-out", tc_model_out, "Model JSON output path")->required();
    train_classifier->add_option("--seed", tc_seed, "Split seed")->capture_default_str();

    // tune
    auto* tune = app.add_subcommand("tune", "Random-search the classifier hyperparameters");
    std::string tu_labels, tu_trials_out;
    std::size_t tu_iters = 8, tu_folds = 10;
    std::uint64_t tu_seed = 0;
    bool tu_anneal = false;
    fr::AnnealingSchedule tu_schedule;
    tune->add_option("--labels", tu_labels, "Label CSV (url,category)")->required();
    tune->add_option("--iters", tu_iters, "Search iterations")->capture_default_str()->check(CLI::PositiveNumber);
    tune->add_option("--folds", tu_folds, "Cross-validation folds")->capture_default_str()->check(CLI::Range(2, 1000000));
    tune->add_option("--seed", tu_seed, "Seed for sampling and fold assignment")->capture_default_str();
    tune->add_flag("--anneal", tu_anneal, "Use simulated-annealing acceptance");
    tune->add_option("--t0", tu_schedule.initial_temp, "Initial temperature")->capture_default_str();
    tune->add_option("--decay", tu_schedule.decay, "Geometric cooling factor")->capture_default_str();
    std::vector<double> tu_alphas = fr::kDefaultAlphas;
    tune->add_option("--alphas", tu_alphas, "Smoothing values in the search grid")
        ->delimiter(',')
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    tune->add_option("--trials-out", tu_trials_out, "Write the trial CSV here instead of stdout");

    // classify
    auto* classify = app.add_subcommand("classify", "Classify one URL");
    std::string cl_model, cl_url;
    classify->add_option("--model", cl_model, "Classifier JSON")->required();
    classify->add_option("--url", cl_url, "URL to classify")->required();

    // rank / recommend
    auto* rank = app.add_subcommand("rank", "Rank categories by share of predicted frecency");
    std::string rk_history, rk_frecency, rk_classifier;
    rank->add_option("--history", rk_history, "History CSV")->required();
    rank->add_option("--frecency-model", rk_frecency, "Frecency model JSON")->required();
    rank->add_option("--classifier", rk_classifier, "Classifier JSON")->required();

    auto* recommend = app.add_subcommand("recommend", "Recommend catalog URLs for the ranked categories");
    std::string rc_history, rc_frecency, rc_classifier, rc_catalog;
    std::size_t rc_k = fr::kDefaultRecommendK;
    recommend->add_option("--history", rc_history, "History CSV")->required();
    recommend->add_option("--frecency-model", rc_frecency, "Frecency model JSON")->required();
    recommend->add_option("--classifier", rc_classifier, "Classifier JSON")->required();
    recommend->add_option("--catalog", rc_catalog, "Catalog CSV (category,url)")->required();
    recommend->add_option("--k", rc_k, "URLs per category")->capture_default_str();

    // serve
    auto* serve = app.add_subcommand("serve", "Serve the JSON API on 127.0.0.1");
    int sv_port = fr::kDefaultPort;
    std::string sv_frecency, sv_classifier, sv_history, sv_catalog;
    serve->add_option("--port", sv_port, "Listen port")->capture_default_str()->check(CLI::Range(1, 65535));
    serve->add_option("--frecency-model", sv_frecency, "Frecency model JSON")->required();
    serve->add_option("--classifier", sv_classifier, "Classifier JSON")->required();
    serve->add_option("--history", sv_history, "History CSV")->required();
    serve->add_option("--catalog", sv_catalog, "Catalog CSV (category,url)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (*synth) {
            fr::SynthOptions options;
            options.points_per_visit = synth_points;
            emit(fr::serialize_history(fr::synth_history(synth_n, synth_seed, options)), synth_out);
        } else if (*train_frecency) {
            const auto data = fr::to_feature_matrix(fr::parse_history(fr::read_text_file(tf_history)));
            if (!data.targets) throw fr::Error(fr::ErrorKind::MixedTargets, "history has no frecency column values");
            const auto model = fr::fit_normal_equation(data);
            fr::write_text_file(tf_model_out, fr::linear_model_to_json(model));
            const auto m = fr::metrics(*data.targets, fr::predict_all(model, data));
            std::cout << metrics_json(m).dump() << "\n";
        } else if (*eval_frecency) {
            const auto data = fr::to_feature_matrix(fr::parse_history(fr::read_text_file(ef_history)));
            if (!data.targets) throw fr::Error(fr::ErrorKind::MixedTargets, "history has no frecency column values");
            const auto model = fr::linear_model_from_json(fr::read_text_file(ef_model));
            const auto m = fr::metrics(*data.targets, fr::predict_all(model, data));
            std::cout << metrics_json(m).dump() << "\n";
        } else if (*train_classifier) {
            auto config = parse_ngram(tc_ngram);
            config.use_idf = tc_use_idf;
            const auto corpus = fr::parse_labels(fr::read_text_file(tc_labels));
            const auto split = fr::holdout_split(corpus.size(), 0.7, tc_seed);
            std::vector<fr::LabeledUrl> train;
            for (auto i : split.train) train.push_back(corpus[i]);
            const auto model = fr::train_classifier(train, config, tc_alpha);
            fr::write_text_file(tc_model_out, fr::mnb_model_to_json(model));

            std::vector<std::string> truth, predicted;
            for (auto i : split.test) {
                truth.push_back(corpus[i].category);
                predicted.push_back(fr::predict_mnb(model, corpus[i].url).category);
            }
            const auto report = fr::evaluate(truth, predicted);
            std::cout << ordered_json{{"precision", report.precision},
                                      {"recall", report.recall},
                                      {"f1", report.f1},
                                      {"accuracy", report.accuracy}}
                             .dump()
                      << "\n";
        } else if (*tune) {
            const auto corpus = fr::parse_labels(fr::read_text_file(tu_labels));
            const auto space = fr::default_search_space(tu_alphas);
            std::optional<fr::AnnealingSchedule> schedule;
            if (tu_anneal) {
                tu_schedule.validate();
                schedule = tu_schedule;
            }
            const auto report = fr::tune_classifier(corpus, space, tu_iters, tu_folds, tu_seed, schedule);
            emit(fr::trials_to_csv(report.trials), tu_trials_out);
            const auto& best = report.best;
            std::cout << ordered_json{{"mean", best.mean_score},
                                      {"std", best.std_score},
                                      {"ngram_lo", best.params.ngram_lo},
                                      {"ngram_hi", best.params.ngram_hi},
                                      {"use_idf", best.params.use_idf},
                                      {"alpha", best.params.alpha}}
                             .dump()
                      << "\n";
        } else if (*classify) {
            const auto model = fr::mnb_model_from_json(fr::read_text_file(cl_model));
            const auto prediction = fr::predict_mnb(model, cl_url);
            ordered_json scores = ordered_json::object();
            for (std::size_t c = 0; c < model.class_count(); ++c) {
                scores[model.class_labels[c]] = prediction.log_scores[c];
            }
            std::cout << ordered_json{{"url", cl_url},
                                      {"category", prediction.category},
                                      {"scores", std::move(scores)}}
                             .dump()
                      << "\n";
        } else if (*rank) {
            const auto ranking = ranking_of(load_scored_history(rk_history, rk_frecency, rk_classifier));
            ordered_json out = ordered_json::array();
            for (std::size_t i = 0; i < ranking.size(); ++i) {
                const auto& s = ranking[i];
                out.push_back({{"rank", i + 1},
                               {"category", s.category},
                               {"probability", s.probability},
                               {"total_frecency", s.total_frecency},
                               {"total_visits", s.total_visits}});
            }
            std::cout << out.dump() << "\n";
        } else if (*recommend) {
            const auto links = load_scored_history(rc_history, rc_frecency, rc_classifier);
            const auto catalog = fr::parse_catalog(fr::read_text_file(rc_catalog));
            std::unordered_set<std::string> visited;
            for (const auto& l : links) visited.insert(l.url);
            ordered_json out = ordered_json::array();
            for (const auto& r : fr::recommend(ranking_of(links), catalog, visited, rc_k)) {
                out.push_back({{"category", r.category}, {"urls", r.urls}});
            }
            std::cout << out.dump() << "\n";
        } else if (*serve) {
            auto records = fr::parse_history(fr::read_text_file(sv_history));
            auto linear = fr::linear_model_from_json(fr::read_text_file(sv_frecency));
            auto mnb = fr::mnb_model_from_json(fr::read_text_file(sv_classifier));
            auto catalog = fr::parse_catalog(fr::read_text_file(sv_catalog));
            auto scored = fr::score_history(records, linear, mnb);
            fr::Service service;
            service.load(fr::make_snapshot(std::move(linear), std::move(mnb), std::move(scored), std::move(catalog)));
            std::cerr << "listening on 127.0.0.1:" << sv_port << "\n";
            if (!fr::serve(service, sv_port)) {
                std::cerr << "error: cannot listen on port " << sv_port << "\n";
                return kDataError;
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const fr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == fr::ErrorKind::InvalidConfig ? kUsageError : kDataError;
    }
    return 0;
}

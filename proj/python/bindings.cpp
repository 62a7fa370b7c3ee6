#include <unordered_set>

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frecency/decay.hpp"
#include "frecency/error.hpp"
#include "frecency/history.hpp"
#include "frecency/hyper_search.hpp"
#include "frecency/link_predictor.hpp"
#include "frecency/model_io.hpp"
#include "frecency/recommender.hpp"
#include "frecency/regression.hpp"
#include "frecency/url_classifier.hpp"

namespace py = pybind11;
namespace fr = frecency;

namespace {

py::dict outcome_to_dict(const fr::SearchOutcome<py::object>& out) {
    py::list log;
    for (const auto& t : out.log) {
        py::dict row;
        row["iteration"] = t.iteration;
        row["candidate"] = t.candidate;
        row["objective"] = t.objective;
        row["accepted"] = t.accepted;
        row["current_objective"] = t.current_objective;
        log.append(row);
    }
    py::dict d;
    d["best"] = out.state.best;
    d["best_objective"] = out.state.best_objective;
    d["current"] = out.state.current;
    d["current_objective"] = out.state.current_objective;
    d["log"] = log;
    return d;
}

std::vector<py::object> as_objects(const py::sequence& space) {
    std::vector<py::object> v;
    for (auto item : space) v.push_back(py::reinterpret_borrow<py::object>(item));
    return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of the frecency package";

    // FrecencyError(ValueError) carries .kind, .line and .column.
    static PyObject* error_type = PyErr_NewException("frecency._core.FrecencyError", PyExc_ValueError, nullptr);
    m.attr("FrecencyError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const fr::Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
            inst.attr("kind") = std::string(e.name());
            inst.attr("line") = e.line() ? py::cast(*e.line()) : py::none();
            inst.attr("column") = e.column() ? py::cast(*e.column()) : py::none();
            PyErr_SetObject(error_type, inst.ptr());
        }
    });

    // Decay and synthetic data.
    m.def("decay_constant", &fr::decay_constant);
    m.def("visit_value", [](double points, double age_days) { return fr::visit_value({points, age_days}); },
          py::arg("points"), py::arg("age_days"));
    m.def(
        "frecency_score",
        [](const std::vector<std::pair<double, double>>& events) {
            std::vector<fr::VisitEvent> ev;
            for (const auto& [p, a] : events) ev.push_back({p, a});
            return fr::frecency_score(ev);
        },
        py::arg("events"), "Sum of decayed visit values over (points, age_days) pairs.");
    m.def(
        "synth_history", [](std::size_t n, std::uint64_t seed) { return fr::synth_history(n, seed); },
        py::arg("n"), py::arg("seed") = 0);

    // History.
    py::class_<fr::HistoryRecord>(m, "HistoryRecord")
        .def(py::init<>())
        .def(py::init([](std::string url, std::int64_t first, std::int64_t last, std::int64_t count,
                         std::optional<double> frecency) {
                 return fr::HistoryRecord{std::move(url), first, last, count, frecency};
             }),
             py::arg("url"), py::arg("first_visit"), py::arg("last_visit"), py::arg("visit_count"),
             py::arg("frecency") = py::none())
        .def_readwrite("url", &fr::HistoryRecord::url)
        .def_readwrite("first_visit", &fr::HistoryRecord::first_visit)
        .def_readwrite("last_visit", &fr::HistoryRecord::last_visit)
        .def_readwrite("visit_count", &fr::HistoryRecord::visit_count)
        .def_readwrite("frecency", &fr::HistoryRecord::frecency)
        .def(py::self == py::self)
        .def("__repr__", [](const fr::HistoryRecord& r) { return "<HistoryRecord " + r.url + ">"; });
    m.def("parse_history", [](const std::string& text) { return fr::parse_history(text); });
    m.def("serialize_history",
          [](const std::vector<fr::HistoryRecord>& records) { return fr::serialize_history(records); });

    // Regression.
    py::class_<fr::LinearModel>(m, "LinearModel")
        .def_readonly("theta", &fr::LinearModel::theta)
        .def_readonly("feature_means", &fr::LinearModel::feature_means)
        .def_readonly("feature_stds", &fr::LinearModel::feature_stds)
        .def("to_json", [](const fr::LinearModel& model) { return fr::linear_model_to_json(model); })
        .def_static("from_json", [](const std::string& text) { return fr::linear_model_from_json(text); });
    py::class_<fr::RegressionMetrics>(m, "RegressionMetrics")
        .def_readonly("mse", &fr::RegressionMetrics::mse)
        .def_readonly("rmse", &fr::RegressionMetrics::rmse)
        .def_readonly("r2", &fr::RegressionMetrics::r2);
    m.def(
        "fit_regression",
        [](const std::vector<std::vector<double>>& rows, const std::vector<double>& targets) {
            return fr::fit_normal_equation(fr::make_feature_matrix(rows, targets));
        },
        py::arg("rows"), py::arg("targets"));
    m.def(
        "fit_history",
        [](const std::vector<fr::HistoryRecord>& records) {
            return fr::fit_normal_equation(fr::to_feature_matrix(records));
        },
        py::arg("records"));
    m.def(
        "predict", [](const fr::LinearModel& model, const std::vector<double>& x) { return fr::predict(model, x); },
        py::arg("model"), py::arg("x"));
    m.def(
        "metrics",
        [](const std::vector<double>& y_true, const std::vector<double>& y_pred) {
            return fr::metrics(y_true, y_pred);
        },
        py::arg("y_true"), py::arg("y_pred"));

    // Link prediction.
    py::class_<fr::ScoredLink>(m, "ScoredLink")
        .def(py::init([](std::string url, std::int64_t visits, double frecency) {
                 return fr::ScoredLink{std::move(url), visits, frecency};
             }),
             py::arg("url"), py::arg("visit_count"), py::arg("frecency"))
        .def_readonly("url", &fr::ScoredLink::url)
        .def_readonly("visit_count", &fr::ScoredLink::visit_count)
        .def_readonly("frecency", &fr::ScoredLink::frecency);
    m.def(
        "predict_links",
        [](const std::string& query, const std::vector<fr::ScoredLink>& history, std::size_t k) {
            return fr::predict_links(query, history, k);
        },
        py::arg("query"), py::arg("history"), py::arg("k") = 10);

    // Classification.
    py::class_<fr::LabeledUrl>(m, "LabeledUrl")
        .def(py::init([](std::string url, std::string category) {
                 return fr::LabeledUrl{std::move(url), std::move(category)};
             }),
             py::arg("url"), py::arg("category"))
        .def_readonly("url", &fr::LabeledUrl::url)
        .def_readonly("category", &fr::LabeledUrl::category);
    m.def("parse_labels", [](const std::string& text) { return fr::parse_labels(text); });
    m.def("tokenize_url", [](const std::string& url) { return fr::tokenize_url(url); });
    m.def(
        "extract_ngrams",
        [](const std::vector<std::string>& tokens, int lo, int hi) {
            return fr::extract_ngrams(tokens, {lo, hi, false});
        },
        py::arg("tokens"), py::arg("ngram_lo") = 1, py::arg("ngram_hi") = 1);

    py::class_<fr::MnbModel>(m, "MnbModel")
        .def_readonly("class_labels", &fr::MnbModel::class_labels)
        .def_readonly("log_priors", &fr::MnbModel::log_priors)
        .def_readonly("alpha", &fr::MnbModel::alpha)
        .def_property_readonly("vocabulary", [](const fr::MnbModel& model) { return model.vocabulary.terms(); })
        .def("to_json", [](const fr::MnbModel& model) { return fr::mnb_model_to_json(model); })
        .def_static("from_json", [](const std::string& text) { return fr::mnb_model_from_json(text); });
    py::class_<fr::Prediction>(m, "Prediction")
        .def_readonly("category", &fr::Prediction::category)
        .def_readonly("log_scores", &fr::Prediction::log_scores);
    py::class_<fr::ClassificationReport>(m, "ClassificationReport")
        .def_readonly("precision", &fr::ClassificationReport::precision)
        .def_readonly("recall", &fr::ClassificationReport::recall)
        .def_readonly("f1", &fr::ClassificationReport::f1)
        .def_readonly("accuracy", &fr::ClassificationReport::accuracy);
    m.def(
        "train_classifier",
        [](const std::vector<fr::LabeledUrl>& corpus, int lo, int hi, bool use_idf, double alpha) {
            return fr::train_classifier(corpus, {lo, hi, use_idf}, alpha);
        },
        py::arg("corpus"), py::arg("ngram_lo") = 1, py::arg("ngram_hi") = 1, py::arg("use_idf") = false,
        py::arg("alpha") = 1.0);
    m.def("predict_mnb", [](const fr::MnbModel& model, const std::string& url) { return fr::predict_mnb(model, url); },
          py::arg("model"), py::arg("url"));
    m.def("evaluate", [](const std::vector<std::string>& y_true, const std::vector<std::string>& y_pred) {
        return fr::evaluate(y_true, y_pred);
    });
    m.def("accuracy", [](const std::vector<std::string>& y_true, const std::vector<std::string>& y_pred) {
        return fr::accuracy(y_true, y_pred);
    });

    // Tuning.
    py::class_<fr::HyperParams>(m, "HyperParams")
        .def(py::init([](int lo, int hi, bool use_idf, double alpha) { return fr::HyperParams{lo, hi, use_idf, alpha}; }),
             py::arg("ngram_lo") = 1, py::arg("ngram_hi") = 1, py::arg("use_idf") = false, py::arg("alpha") = 1.0)
        .def_readwrite("ngram_lo", &fr::HyperParams::ngram_lo)
        .def_readwrite("ngram_hi", &fr::HyperParams::ngram_hi)
        .def_readwrite("use_idf", &fr::HyperParams::use_idf)
        .def_readwrite("alpha", &fr::HyperParams::alpha)
        .def(py::self == py::self)
        .def("__repr__", [](const fr::HyperParams& p) { return fr::to_string(p); });
    py::class_<fr::TrialResult>(m, "TrialResult")
        .def_readonly("params", &fr::TrialResult::params)
        .def_readonly("mean_score", &fr::TrialResult::mean_score)
        .def_readonly("std_score", &fr::TrialResult::std_score)
        .def_readonly("fold_scores", &fr::TrialResult::fold_scores);
    m.def("default_search_space", &fr::default_search_space, py::arg("alphas") = fr::kDefaultAlphas);
    m.def("kfold_split", &fr::kfold_split, py::arg("n"), py::arg("k"), py::arg("seed") = 0);
    m.def(
        "cross_validate",
        [](const std::vector<fr::LabeledUrl>& dataset, const fr::HyperParams& params, std::size_t k,
           std::uint64_t seed) { return fr::cross_validate(dataset, params, k, seed); },
        py::arg("dataset"), py::arg("params"), py::arg("k") = 10, py::arg("seed") = 0);
    m.def(
        "random_search",
        [](const py::sequence& space, std::size_t n_iter, std::function<double(const py::object&)> objective,
           std::uint64_t seed) {
            const auto items = as_objects(space);
            return outcome_to_dict(fr::random_search<py::object>(items, n_iter, objective, seed));
        },
        py::arg("space"), py::arg("n_iter"), py::arg("objective"), py::arg("seed") = 0,
        "Greedy random search minimizing objective over space.");
    m.def(
        "annealed_search",
        [](const py::sequence& space, std::size_t n_iter, std::function<double(const py::object&)> objective,
           double initial_temp, double decay, std::uint64_t seed) {
            const auto items = as_objects(space);
            return outcome_to_dict(
                fr::annealed_search<py::object>(items, n_iter, objective, {initial_temp, decay}, seed));
        },
        py::arg("space"), py::arg("n_iter"), py::arg("objective"), py::arg("initial_temp") = 1.0,
        py::arg("decay") = 0.9, py::arg("seed") = 0);

    // Recommendations.
    py::class_<fr::CategorizedLink>(m, "CategorizedLink")
        .def(py::init([](std::string url, std::int64_t visits, double frecency, std::string category) {
                 return fr::CategorizedLink{std::move(url), visits, frecency, std::move(category)};
             }),
             py::arg("url"), py::arg("visit_count"), py::arg("frecency"), py::arg("category"))
        .def_readonly("url", &fr::CategorizedLink::url)
        .def_readonly("visit_count", &fr::CategorizedLink::visit_count)
        .def_readonly("frecency", &fr::CategorizedLink::frecency)
        .def_readonly("category", &fr::CategorizedLink::category);
    py::class_<fr::CategoryScore>(m, "CategoryScore")
        .def_readonly("category", &fr::CategoryScore::category)
        .def_readonly("total_frecency", &fr::CategoryScore::total_frecency)
        .def_readonly("total_visits", &fr::CategoryScore::total_visits)
        .def_readonly("probability", &fr::CategoryScore::probability);
    py::class_<fr::Catalog>(m, "Catalog")
        .def(py::init<>())
        .def("add", &fr::Catalog::add)
        .def("categories", &fr::Catalog::categories)
        .def("urls", [](const fr::Catalog& c, const std::string& category) {
            const auto span = c.urls(category);
            return std::vector<std::string>(span.begin(), span.end());
        });
    py::class_<fr::Recommendation>(m, "Recommendation")
        .def_readonly("category", &fr::Recommendation::category)
        .def_readonly("urls", &fr::Recommendation::urls);
    m.def("parse_catalog", [](const std::string& text) { return fr::parse_catalog(text); });
    m.def("category_totals",
          [](const std::vector<fr::CategorizedLink>& links) { return fr::category_totals(links); });
    m.def("category_probabilities", &fr::category_probabilities);
    m.def("rank_categories", &fr::rank_categories);
    m.def(
        "recommend",
        [](const std::vector<fr::CategoryScore>& ranking, const fr::Catalog& catalog,
           const std::vector<std::string>& visited, std::size_t k) {
            return fr::recommend(ranking, catalog, std::unordered_set<std::string>(visited.begin(), visited.end()), k);
        },
        py::arg("ranking"), py::arg("catalog"), py::arg("visited") = std::vector<std::string>{},
        py::arg("k") = 3);
}

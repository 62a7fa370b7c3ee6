#include "frecency/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frecency/error.hpp"
#include "frecency/history.hpp"

namespace frecency {

using nlohmann::ordered_json;

namespace {

std::vector<double> real_array(const ordered_json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
        throw Error(ErrorKind::ModelFormat, std::string("missing array '") + key + "'");
    }
    std::vector<double> out;
    for (const auto& v : doc.at(key)) {
        if (!v.is_number()) throw Error(ErrorKind::ModelFormat, std::string("non-numeric entry in '") + key + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

ordered_json parse_document(const std::string& text) {
    try {
        auto doc = ordered_json::parse(text);
        if (!doc.is_object()) throw Error(ErrorKind::ModelFormat, "model document is not an object");
        return doc;
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorKind::ModelFormat, e.what());
    }
}

}  // namespace

std::string linear_model_to_json(const LinearModel& model) {
    ordered_json doc;
    doc["theta"] = model.theta;
    doc["feature_means"] = model.feature_means;
    doc["feature_stds"] = model.feature_stds;
    if (model.feature_count() == kFeatureCount) {
        doc["feature_order"] = ordered_json::array();
        for (auto name : kFeatureOrder) doc["feature_order"].push_back(std::string(name));
    }
    return doc.dump(2) + "\n";
}

LinearModel linear_model_from_json(const std::string& text) {
    const auto doc = parse_document(text);
    LinearModel model;
    model.theta = real_array(doc, "theta");
    model.feature_means = real_array(doc, "feature_means");
    model.feature_stds = real_array(doc, "feature_stds");
    const std::size_t m = model.feature_means.size();
    if (model.theta.size() != m + 1 || model.feature_stds.size() != m) {
        throw Error(ErrorKind::ModelFormat, "theta, means and stds have inconsistent lengths");
    }
    for (double sd : model.feature_stds) {
        if (!(sd > 0.0)) throw Error(ErrorKind::ModelFormat, "feature_stds must be positive");
    }
    if (doc.contains("feature_order")) {
        const auto& order = doc.at("feature_order");
        bool matches = order.is_array() && order.size() == kFeatureCount;
        for (std::size_t i = 0; matches && i < kFeatureCount; ++i) {
            matches = order[i].is_string() && order[i].get<std::string>() == kFeatureOrder[i];
        }
        if (!matches) throw Error(ErrorKind::ModelFormat, "unexpected feature_order");
    }
    return model;
}

std::string mnb_model_to_json(const MnbModel& model) {
    ordered_json doc;
    doc["vocabulary"] = model.vocabulary.terms();
    doc["class_labels"] = model.class_labels;
    doc["log_priors"] = model.log_priors;
    auto rows = ordered_json::array();
    const std::size_t v = model.vocabulary_size();
    for (std::size_t c = 0; c < model.class_count(); ++c) {
        rows.push_back(std::vector<double>(model.log_likelihoods.begin() + static_cast<std::ptrdiff_t>(c * v),
                                           model.log_likelihoods.begin() + static_cast<std::ptrdiff_t>((c + 1) * v)));
    }
    doc["log_likelihoods"] = std::move(rows);
    doc["alpha"] = model.alpha;
    doc["config"] = {{"ngram_lo", model.config.ngram_lo},
                     {"ngram_hi", model.config.ngram_hi},
                     {"use_idf", model.config.use_idf}};
    doc["idf_weights"] = model.idf_weights ? ordered_json(*model.idf_weights) : ordered_json(nullptr);
    return doc.dump() + "\n";
}

MnbModel mnb_model_from_json(const std::string& text) {
    const auto doc = parse_document(text);
    MnbModel model;
    try {
        for (const auto& term : doc.at("vocabulary")) model.vocabulary.add(term.get<std::string>());
        model.class_labels = doc.at("class_labels").get<std::vector<std::string>>();
        model.log_priors = real_array(doc, "log_priors");
        for (const auto& row : doc.at("log_likelihoods")) {
            const auto values = row.get<std::vector<double>>();
            if (values.size() != model.vocabulary_size()) {
                throw Error(ErrorKind::ModelFormat, "likelihood row width differs from vocabulary");
            }
            model.log_likelihoods.insert(model.log_likelihoods.end(), values.begin(), values.end());
        }
        model.alpha = doc.at("alpha").get<double>();
        const auto& config = doc.at("config");
        model.config.ngram_lo = config.at("ngram_lo").get<int>();
        model.config.ngram_hi = config.at("ngram_hi").get<int>();
        model.config.use_idf = config.at("use_idf").get<bool>();
        if (doc.contains("idf_weights") && !doc.at("idf_weights").is_null()) {
            model.idf_weights = real_array(doc, "idf_weights");
        }
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorKind::ModelFormat, e.what());
    }

    if (doc.at("vocabulary").size() != model.vocabulary_size() || model.class_labels.size() < 2 || model.log_priors.size() != model.class_count() ||
        model.log_likelihoods.size() != model.class_count() * model.vocabulary_size()) {
        throw Error(ErrorKind::ModelFormat, "inconsistent classifier dimensions");
    }
    if (model.config.use_idf != model.idf_weights.has_value() ||
        (model.idf_weights && model.idf_weights->size() != model.vocabulary_size())) {
        throw Error(ErrorKind::ModelFormat, "idf_weights must be present iff use_idf");
    }
    validate(model.config);
    return model;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << contents;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace frecency

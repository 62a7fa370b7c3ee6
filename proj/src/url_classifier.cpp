#include "frecency/url_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "frecency/csv.hpp"
#include "frecency/error.hpp"

namespace frecency {

std::vector<LabeledUrl> parse_labels(std::string_view csv_text) {
    const auto lines = csv::split_lines(csv_text);
    if (lines.empty() || lines.front().text != kLabelHeader) {
        throw Error(ErrorKind::MissingHeader,
                    "first line must be '" + std::string(kLabelHeader) + "'", 1);
    }
    std::vector<LabeledUrl> out;
    out.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = csv::split_fields(lines[i].text);
        if (fields.size() != 2) {
            throw Error(ErrorKind::MalformedRow,
                        "expected 2 fields, found " + std::to_string(fields.size()),
                        lines[i].number);
        }
        LabeledUrl row{std::string(fields[0]), std::string(csv::trim(fields[1]))};
        if (csv::trim(row.url).empty() || row.category.empty()) {
            throw Error(ErrorKind::InvariantViolation, "empty url or category", lines[i].number);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string serialize_labels(std::span<const LabeledUrl> corpus) {
    std::string out{kLabelHeader};
    out += '\n';
    for (const auto& row : corpus) {
        out += row.url;
        out += ',';
        out += row.category;
        out += '\n';
    }
    return out;
}

void validate(const VectorizerConfig& config) {
    if (config.ngram_lo < 1 || config.ngram_hi < config.ngram_lo) {
        throw Error(ErrorKind::InvalidConfig,
                    "ngram range (" + std::to_string(config.ngram_lo) + "," +
                        std::to_string(config.ngram_hi) + ") is invalid");
    }
}

std::optional<std::size_t> Vocabulary::find(std::string_view term) const {
    auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Vocabulary::add(const std::string& term) {
    auto [it, inserted] = index_.try_emplace(term, terms_.size());
    if (inserted) terms_.push_back(term);
    return it->second;
}

double SparseVector::norm() const {
    double sum = 0.0;
    for (double v : values) sum += v * v;
    return std::sqrt(sum);
}

std::vector<std::string> tokenize_url(std::string_view url) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : url) {
        const auto c = static_cast<unsigned char>(ch);
        const bool ascii_alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                                 (c >= '0' && c <= '9');
        if (ascii_alnum || c >= 0x80) {
            current += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : ch;
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> extract_ngrams(std::span<const std::string> tokens,
                                        const VectorizerConfig& config) {
    validate(config);
    std::vector<std::string> grams;
    for (int n = config.ngram_lo; n <= config.ngram_hi; ++n) {
        const auto width = static_cast<std::size_t>(n);
        if (width > tokens.size()) break;
        for (std::size_t start = 0; start + width <= tokens.size(); ++start) {
            std::string gram = tokens[start];
            for (std::size_t j = 1; j < width; ++j) {
                gram += ' ';
                gram += tokens[start + j];
            }
            grams.push_back(std::move(gram));
        }
    }
    return grams;
}

std::vector<std::string> document_ngrams(std::string_view url, const VectorizerConfig& config) {
    const auto tokens = tokenize_url(url);
    return extract_ngrams(tokens, config);
}

FittedVectorizer fit_vectorizer(std::span<const LabeledUrl> corpus,
                                const VectorizerConfig& config) {
    validate(config);
    if (corpus.empty()) throw Error(ErrorKind::EmptyCorpus, "no documents to fit");

    FittedVectorizer fitted;
    fitted.config = config;
    std::vector<std::size_t> doc_freq;
    std::vector<std::size_t> seen_in;  // last document index that counted each term
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        for (const auto& gram : document_ngrams(corpus[d].url, config)) {
            const auto idx = fitted.vocabulary.add(gram);
            if (idx == doc_freq.size()) {
                doc_freq.push_back(0);
                seen_in.push_back(corpus.size());
            }
            if (seen_in[idx] != d) {
                seen_in[idx] = d;
                ++doc_freq[idx];
            }
        }
    }

    if (config.use_idf) {
        const double n_docs = static_cast<double>(corpus.size());
        std::vector<double> idf(doc_freq.size());
        for (std::size_t t = 0; t < idf.size(); ++t) {
            idf[t] = std::log((1.0 + n_docs) / (1.0 + static_cast<double>(doc_freq[t]))) + 1.0;
        }
        fitted.idf_weights = std::move(idf);
    }
    return fitted;
}

SparseVector vectorize(std::span<const std::string> ngrams, const Vocabulary& vocabulary,
                       const std::optional<std::vector<double>>& idf_weights) {
    std::map<std::size_t, double> counts;
    for (const auto& gram : ngrams) {
        if (auto idx = vocabulary.find(gram)) counts[*idx] += 1.0;
    }
    SparseVector v;
    v.indices.reserve(counts.size());
    v.values.reserve(counts.size());
    for (const auto& [idx, count] : counts) {
        v.indices.push_back(idx);
        v.values.push_back(idf_weights ? count * (*idf_weights)[idx] : count);
    }
    if (idf_weights && !v.empty()) {
        const double n = v.norm();
        for (auto& value : v.values) value /= n;
    }
    return v;
}

MnbModel train_mnb(std::span<const SparseVector> vectors, std::span<const std::string> labels,
                   double alpha, std::size_t vocabulary_size) {
    if (vectors.size() != labels.size()) {
        throw Error(ErrorKind::DimensionMismatch, "vector and label counts differ");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw Error(ErrorKind::NonPositiveAlpha, "alpha must be positive");
    }

    MnbModel model;
    model.alpha = alpha;
    std::map<std::string, std::size_t> class_index;
    std::vector<std::size_t> label_ids(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = class_index.try_emplace(labels[i], model.class_labels.size());
        if (inserted) model.class_labels.push_back(labels[i]);
        label_ids[i] = it->second;
    }
    const std::size_t classes = model.class_labels.size();
    if (classes < 2) throw Error(ErrorKind::SingleClass, "need at least two distinct labels");

    std::vector<double> doc_counts(classes, 0.0);
    std::vector<double> term_counts(classes * vocabulary_size, 0.0);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const auto c = label_ids[i];
        doc_counts[c] += 1.0;
        const auto& v = vectors[i];
        for (std::size_t j = 0; j < v.indices.size(); ++j) {
            if (v.indices[j] >= vocabulary_size) {
                throw Error(ErrorKind::DimensionMismatch, "feature index outside vocabulary");
            }
            term_counts[c * vocabulary_size + v.indices[j]] += v.values[j];
        }
    }

    const double n = static_cast<double>(vectors.size());
    model.log_priors.resize(classes);
    model.log_likelihoods.resize(classes * vocabulary_size);
    for (std::size_t c = 0; c < classes; ++c) {
        model.log_priors[c] = std::log(doc_counts[c] / n);
        double total = 0.0;
        for (std::size_t t = 0; t < vocabulary_size; ++t) total += term_counts[c * vocabulary_size + t];
        const double log_denominator =
            std::log(total + alpha * static_cast<double>(vocabulary_size));
        for (std::size_t t = 0; t < vocabulary_size; ++t) {
            model.log_likelihoods[c * vocabulary_size + t] =
                std::log(term_counts[c * vocabulary_size + t] + alpha) - log_denominator;
        }
    }
    return model;
}

MnbModel train_classifier(std::span<const LabeledUrl> corpus, const VectorizerConfig& config,
                          double alpha) {
    auto fitted = fit_vectorizer(corpus, config);
    std::vector<SparseVector> vectors;
    std::vector<std::string> labels;
    vectors.reserve(corpus.size());
    labels.reserve(corpus.size());
    for (const auto& doc : corpus) {
        const auto grams = document_ngrams(doc.url, config);
        vectors.push_back(vectorize(grams, fitted.vocabulary, fitted.idf_weights));
        labels.push_back(doc.category);
    }
    auto model = train_mnb(vectors, labels, alpha, fitted.vocabulary.size());
    model.vocabulary = std::move(fitted.vocabulary);
    model.config = config;
    model.idf_weights = std::move(fitted.idf_weights);
    return model;
}

std::vector<double> score_vector(const MnbModel& model, const SparseVector& x) {
    std::vector<double> scores(model.log_priors);
    for (std::size_t c = 0; c < model.class_count(); ++c) {
        for (std::size_t j = 0; j < x.indices.size(); ++j) {
            scores[c] += x.values[j] * model.log_likelihood(c, x.indices[j]);
        }
    }
    return scores;
}

Prediction predict_mnb(const MnbModel& model, std::string_view url) {
    const auto grams = document_ngrams(url, model.config);
    Prediction out;
    out.log_scores = score_vector(model, vectorize(grams, model.vocabulary, model.idf_weights));
    const auto best = std::max_element(out.log_scores.begin(), out.log_scores.end());
    out.category = model.class_labels[static_cast<std::size_t>(best - out.log_scores.begin())];
    return out;
}

ClassificationReport evaluate(std::span<const std::string> y_true,
                              std::span<const std::string> y_pred) {
    if (y_true.size() != y_pred.size()) {
        throw Error(ErrorKind::DimensionMismatch, "y_true and y_pred differ in length");
    }
    if (y_true.empty()) throw Error(ErrorKind::EmptyInput, "no labels to evaluate");

    const std::set<std::string> label_set(y_true.begin(), y_true.end());
    ClassificationReport report;
    for (const auto& label : label_set) {
        double tp = 0.0, fp = 0.0, fn = 0.0;
        for (std::size_t i = 0; i < y_true.size(); ++i) {
            const bool actual = y_true[i] == label;
            const bool predicted = y_pred[i] == label;
            if (actual && predicted) tp += 1.0;
            else if (predicted) fp += 1.0;
            else if (actual) fn += 1.0;
        }
        const double p = tp + fp > 0.0 ? tp / (tp + fp) : 0.0;
        const double r = tp + fn > 0.0 ? tp / (tp + fn) : 0.0;
        report.precision += p;
        report.recall += r;
        report.f1 += p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
    }
    const double k = static_cast<double>(label_set.size());
    report.precision /= k;
    report.recall /= k;
    report.f1 /= k;
    report.accuracy = accuracy(y_true, y_pred);
    return report;
}

double accuracy(std::span<const std::string> y_true, std::span<const std::string> y_pred) {
    if (y_true.size() != y_pred.size()) {
        throw Error(ErrorKind::DimensionMismatch, "y_true and y_pred differ in length");
    }
    if (y_true.empty()) throw Error(ErrorKind::EmptyInput, "no labels to score");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) correct += y_true[i] == y_pred[i] ? 1 : 0;
    return static_cast<double>(correct) / static_cast<double>(y_true.size());
}

}  // namespace frecency

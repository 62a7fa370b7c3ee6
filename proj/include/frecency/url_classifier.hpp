#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace frecency {

inline constexpr std::string_view kLabelHeader = "url,category";

struct LabeledUrl {
    std::string url;
    std::string category;

    friend bool operator==(const LabeledUrl&, const LabeledUrl&) = default;
};

// Throws Error(MissingHeader | MalformedRow | InvariantViolation).
std::vector<LabeledUrl> parse_labels(std::string_view csv_text);
std::string serialize_labels(std::span<const LabeledUrl> corpus);

struct VectorizerConfig {
    int ngram_lo = 1;
    int ngram_hi = 1;
    bool use_idf = false;

    friend bool operator==(const VectorizerConfig&, const VectorizerConfig&) = default;
};

// Throws Error(InvalidConfig) unless 1 <= ngram_lo <= ngram_hi.
void validate(const VectorizerConfig& config);

// N-gram strings indexed in first-seen order.
class Vocabulary {
public:
    std::size_t size() const { return terms_.size(); }
    const std::vector<std::string>& terms() const { return terms_; }
    std::optional<std::size_t> find(std::string_view term) const;
    // Returns the index of term, inserting it at the end if new.
    std::size_t add(const std::string& term);

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Sorted unique indices with their weights.
struct SparseVector {
    std::vector<std::size_t> indices;
    std::vector<double> values;

    bool empty() const { return indices.empty(); }
    double norm() const;
};

struct FittedVectorizer {
    VectorizerConfig config;
    Vocabulary vocabulary;
    std::optional<std::vector<double>> idf_weights;
};

// Lowercases, splits on every ASCII character that is not a letter or digit,
// drops empty pieces. Bytes >= 0x80 are kept inside tokens.
std::vector<std::string> tokenize_url(std::string_view url);

// All contiguous n-token windows joined by one space, for n in
// [ngram_lo, ngram_hi], ordered by n then position.
std::vector<std::string> extract_ngrams(std::span<const std::string> tokens,
                                        const VectorizerConfig& config);

std::vector<std::string> document_ngrams(std::string_view url, const VectorizerConfig& config);

// Vocabulary over the whole corpus; with use_idf, the smoothed
// idf(t) = ln((1 + N) / (1 + df(t))) + 1. Throws Error(EmptyCorpus | InvalidConfig).
FittedVectorizer fit_vectorizer(std::span<const LabeledUrl> corpus, const VectorizerConfig& config);

// Term counts over the vocabulary, unknown n-grams ignored. With idf weights
// the counts are scaled per term and the vector is L2-normalized.
SparseVector vectorize(std::span<const std::string> ngrams, const Vocabulary& vocabulary,
                       const std::optional<std::vector<double>>& idf_weights);

struct MnbModel {
    Vocabulary vocabulary;
    std::vector<std::string> class_labels;  // first-seen order in training
    std::vector<double> log_priors;
    std::vector<double> log_likelihoods;  // row-major, class x vocabulary
    double alpha = 1.0;
    VectorizerConfig config;
    std::optional<std::vector<double>> idf_weights;

    std::size_t class_count() const { return class_labels.size(); }
    std::size_t vocabulary_size() const { return vocabulary.size(); }
    double log_likelihood(std::size_t cls, std::size_t term) const {
        return log_likelihoods[cls * vocabulary_size() + term];
    }
};

// Multinomial NB with additive smoothing:
//   log P(c)   = ln(n_c / n)
//   log P(t|c) = ln((count(t,c) + alpha) / (sum_t' count(t',c) + alpha |V|))
// Only the probability tables are set; train_classifier attaches the
// vectorizer state (vocabulary, config, idf weights).
// Throws Error(SingleClass | NonPositiveAlpha | DimensionMismatch).
MnbModel train_mnb(std::span<const SparseVector> vectors, std::span<const std::string> labels,
                   double alpha, std::size_t vocabulary_size);

// fit_vectorizer + vectorize + train_mnb.
MnbModel train_classifier(std::span<const LabeledUrl> corpus, const VectorizerConfig& config,
                          double alpha);

struct Prediction {
    std::string category;
    std::vector<double> log_scores;  // aligned with class_labels
};

// Per-class log prior + sum_t x_t log P(t|c).
std::vector<double> score_vector(const MnbModel& model, const SparseVector& x);

// Argmax of score_vector, ties resolved by class_labels order.
Prediction predict_mnb(const MnbModel& model, std::string_view url);

struct ClassificationReport {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double accuracy = 0.0;
};

// Macro-averaged over the labels present in y_true.
// Throws Error(DimensionMismatch | EmptyInput).
ClassificationReport evaluate(std::span<const std::string> y_true,
                              std::span<const std::string> y_pred);

double accuracy(std::span<const std::string> y_true, std::span<const std::string> y_pred);

}  // namespace frecency

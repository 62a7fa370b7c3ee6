#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "frecency/error.hpp"
#include "frecency/rng.hpp"
#include "frecency/url_classifier.hpp"
#include "oracles.hpp"

using namespace frecency;

namespace {

using Strings = std::vector<std::string>;

double sum_exp(std::span<const double> logs) {
    double s = 0.0;
    for (double v : logs) s += std::exp(v);
    return s;
}

}  // namespace

TEST_CASE("tokenize_url") {
    CHECK(tokenize_url("http://www.gamespot.com/ps/") == Strings{"http", "www", "gamespot", "com", "ps"});
    CHECK(tokenize_url("").empty());
    CHECK(tokenize_url("HTTPS://Drive.Google.com") == Strings{"https", "drive", "google", "com"});
    CHECK(tokenize_url("a--b__c9") == Strings{"a", "b", "c9"});
    CHECK(tokenize_url("http://b\xc3\xbc" "cher.de") == Strings{"http", "b\xc3\xbc" "cher", "de"});
}

TEST_CASE("extract_ngrams") {
    const Strings abc = {"a", "b", "c"};
    CHECK(extract_ngrams(abc, {1, 1, false}) == Strings{"a", "b", "c"});
    CHECK(extract_ngrams(abc, {1, 2, false}) == Strings{"a", "b", "c", "a b", "b c"});
    CHECK(extract_ngrams(Strings{"a"}, {1, 2, false}) == Strings{"a"});
    CHECK(extract_ngrams(abc, {2, 3, false}) == Strings{"a b", "b c", "a b c"});
    CHECK_THROWS_AS(extract_ngrams(abc, {2, 1, false}), Error);
    CHECK_THROWS_AS(extract_ngrams(abc, {0, 1, false}), Error);
}

TEST_CASE("fit_vectorizer") {
    const std::vector<LabeledUrl> one = {{"a b", "X"}};
    const auto v = fit_vectorizer(one, {1, 1, false});
    CHECK(v.vocabulary.terms() == Strings{"a", "b"});
    CHECK(v.vocabulary.find("b") == std::optional<std::size_t>(1));
    CHECK_FALSE(v.idf_weights.has_value());

    const std::vector<LabeledUrl> same = {{"a", "X"}, {"a", "Y"}};
    CHECK((*fit_vectorizer(same, {1, 1, true}).idf_weights)[0] == 1.0);

    const std::vector<LabeledUrl> diff = {{"a", "X"}, {"b", "Y"}};
    const auto idf = *fit_vectorizer(diff, {1, 1, true}).idf_weights;
    CHECK(idf[0] == doctest::Approx(std::log(1.5) + 1.0).epsilon(1e-15));
    CHECK(idf[0] == doctest::Approx(1.405465).epsilon(1e-6));

    // Repeats inside one document count once toward df.
    const std::vector<LabeledUrl> repeats = {{"a a a", "X"}, {"b", "Y"}, {"b", "Y"}};
    const auto w = *fit_vectorizer(repeats, {1, 1, true}).idf_weights;
    CHECK(w[0] == doctest::Approx(std::log(4.0 / 2.0) + 1.0));
    CHECK(w[1] == doctest::Approx(std::log(4.0 / 3.0) + 1.0));

    CHECK_THROWS_AS(fit_vectorizer(std::vector<LabeledUrl>{}, {1, 1, false}), Error);
}

TEST_CASE("vectorize") {
    Vocabulary vocab;
    vocab.add("a");
    vocab.add("b");
    auto v = vectorize(Strings{"a", "a", "b"}, vocab, std::nullopt);
    CHECK(v.indices == std::vector<std::size_t>{0, 1});
    CHECK(v.values == std::vector<double>{2, 1});
    CHECK(vectorize(Strings{"c"}, vocab, std::nullopt).empty());

    const double idf_a = std::log(1.5) + 1.0;
    v = vectorize(Strings{"a", "b"}, vocab, std::vector<double>{idf_a, 1.0});
    CHECK(v.values[0] == doctest::Approx(0.814802).epsilon(1e-6));
    CHECK(v.values[1] == doctest::Approx(0.579739).epsilon(1e-6));
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("train_mnb on the toy corpus matches the hand computation") {
    const auto model = train_classifier(fixtures::toy_corpus(), {1, 1, false}, 1.0);
    REQUIRE(model.class_labels == Strings{"Games", "Computers"});
    CHECK(model.vocabulary_size() == 5);
    CHECK(std::exp(model.log_priors[0]) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    const auto game = *model.vocabulary.find("game");
    CHECK(std::exp(model.log_likelihood(0, game)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(std::exp(model.log_likelihood(1, game)) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));

    const auto p = predict_mnb(model, "game");
    CHECK(p.category == "Games");
    CHECK(std::exp(p.log_scores[0]) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
    CHECK(std::exp(p.log_scores[1]) == doctest::Approx(1.0 / 21.0).epsilon(1e-14));
}

TEST_CASE("train_mnb edge cases") {
    const std::vector<LabeledUrl> balanced = {{"x", "A"}, {"y", "B"}, {"x y", "A"}, {"z", "B"}};
    const auto model = train_classifier(balanced, {1, 1, false}, 0.5);
    CHECK(model.log_priors[0] == doctest::Approx(std::log(0.5)));
    CHECK(model.log_priors[1] == doctest::Approx(std::log(0.5)));

    const auto flat = train_classifier(balanced, {1, 1, false}, 1e6);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t t = 0; t < flat.vocabulary_size(); ++t)
            CHECK(std::abs(std::exp(flat.log_likelihood(c, t)) - 1.0 / 3.0) < 1e-3);

    const std::vector<LabeledUrl> single = {{"x", "A"}, {"y", "A"}};
    try {
        train_classifier(single, {1, 1, false}, 1.0);
        FAIL("expected SingleClass");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingleClass);
    }
    try {
        train_classifier(balanced, {1, 1, false}, 0.0);
        FAIL("expected NonPositiveAlpha");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositiveAlpha);
    }
}

TEST_CASE("unseen tokens fall back to the largest prior") {
    const std::vector<LabeledUrl> corpus = {{"alpha", "Small"}, {"beta", "Big"}, {"gamma", "Big"}};
    const auto model = train_classifier(corpus, {1, 2, true}, 0.1);
    CHECK(predict_mnb(model, "zzz qqq").category == "Big");
}

TEST_CASE("ties resolve by first-seen class order") {
    const std::vector<LabeledUrl> corpus = {{"x", "Second"}, {"y", "First"}};
    const auto model = train_classifier(corpus, {1, 1, false}, 1.0);
    CHECK(predict_mnb(model, "nothing").category == "Second");
}

TEST_CASE("separable two-document corpus predicts its own labels") {
    const std::vector<LabeledUrl> corpus = {{"http://games.example/arcade", "Games"},
                                            {"http://bank.example/loans", "Business"}};
    for (double alpha : {0.01, 0.1, 1.0}) {
        for (bool idf : {false, true}) {
            const auto model = train_classifier(corpus, {1, 2, idf}, alpha);
            for (const auto& doc : corpus) {
                const auto p = predict_mnb(model, doc.url);
                CHECK(p.category == doc.category);
                const auto own = static_cast<std::size_t>(doc.category == "Business");
                CHECK(p.log_scores[own] > p.log_scores[1 - own]);
            }
        }
    }
}

TEST_CASE("scores equal term-by-term Bayes on small random corpora") {
    auto engine = rng::make_engine(404);
    const Strings terms = {"t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9"};
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n_docs = 2 + rng::uniform_index(engine, 7);
        const std::size_t n_terms = 1 + rng::uniform_index(engine, 10);
        std::vector<LabeledUrl> corpus;
        std::vector<Strings> docs;
        Strings labels;
        for (std::size_t d = 0; d < n_docs; ++d) {
            Strings doc;
            const std::size_t len = 1 + rng::uniform_index(engine, 5);
            for (std::size_t i = 0; i < len; ++i) doc.push_back(terms[rng::uniform_index(engine, n_terms)]);
            std::string text;
            for (const auto& t : doc) text += t + "/";
            const std::string label = d < 2 ? (d == 0 ? "A" : "B") : (rng::uniform_index(engine, 2) ? "A" : "B");
            corpus.push_back({text, label});
            docs.push_back(doc);
            labels.push_back(label);
        }
        const double alpha = std::vector<double>{0.01, 0.1, 1.0}[rng::uniform_index(engine, 3)];
        const auto model = train_classifier(corpus, {1, 1, false}, alpha);
        Strings query;
        for (std::size_t i = 0; i < 4; ++i) query.push_back(terms[rng::uniform_index(engine, 10)]);
        std::string text;
        for (const auto& t : query) text += t + " ";
        const auto expected = oracles::bayes_log_scores(docs, labels, query, alpha);
        const auto got = predict_mnb(model, text);
        REQUIRE(expected.labels == model.class_labels);
        for (std::size_t c = 0; c < expected.log_scores.size(); ++c)
            CHECK(std::abs(got.log_scores[c] - expected.log_scores[c]) <= 1e-12);
    }
}

TEST_CASE("probability tables are normalized") {
    std::ifstream in(fixtures::data_path("dmoz_sample.csv"));
    std::stringstream ss;
    ss << in.rdbuf();
    const auto corpus = parse_labels(ss.str());
    REQUIRE(corpus.size() >= 1000);
    for (VectorizerConfig config : {VectorizerConfig{1, 1, false}, VectorizerConfig{1, 2, true}}) {
        const auto model = train_classifier(corpus, config, 0.01);
        CHECK(std::abs(sum_exp(model.log_priors) - 1.0) < 1e-9);
        for (std::size_t c = 0; c < model.class_count(); ++c) {
            std::span<const double> row(model.log_likelihoods.data() + c * model.vocabulary_size(),
                                        model.vocabulary_size());
            CHECK(std::abs(sum_exp(row) - 1.0) < 1e-9);
        }
        if (config.use_idf) {
            for (std::size_t i = 0; i < 200; ++i) {
                const auto v = vectorize(document_ngrams(corpus[i].url, config), model.vocabulary, model.idf_weights);
                if (!v.empty()) CHECK(std::abs(v.norm() - 1.0) <= 1e-9);
            }
        }
    }
}

TEST_CASE("training is deterministic") {
    const auto corpus = fixtures::toy_corpus();
    const auto a = train_classifier(corpus, {1, 2, true}, 0.1);
    const auto b = train_classifier(corpus, {1, 2, true}, 0.1);
    CHECK(a.vocabulary.terms() == b.vocabulary.terms());
    CHECK(a.log_likelihoods == b.log_likelihoods);
    CHECK(a.log_priors == b.log_priors);
    CHECK(*a.idf_weights == *b.idf_weights);
}

TEST_CASE("evaluate") {
    const Strings truth = {"A", "A", "B", "B"};
    auto r = evaluate(truth, truth);
    CHECK(r.precision == 1.0);
    CHECK(r.recall == 1.0);
    CHECK(r.f1 == 1.0);
    CHECK(r.accuracy == 1.0);

    r = evaluate(truth, Strings{"A", "B", "A", "B"});
    CHECK(r.precision == 0.5);
    CHECK(r.recall == 0.5);
    CHECK(r.f1 == 0.5);
    CHECK(r.accuracy == 0.5);

    // A class never predicted contributes zero precision and F1.
    r = evaluate(Strings{"A", "B"}, Strings{"A", "A"});
    CHECK(r.precision == doctest::Approx(0.25));
    CHECK(r.recall == doctest::Approx(0.5));
    CHECK(r.f1 == doctest::Approx((2.0 * 0.5 * 1.0 / 1.5) / 2.0));

    CHECK_THROWS_AS(evaluate(truth, Strings{"A"}), Error);
    CHECK_THROWS_AS(evaluate(Strings{}, Strings{}), Error);
}

TEST_CASE("macro F1 is invariant under consistent relabeling") {
    auto engine = rng::make_engine(12);
    const Strings names = {"A", "B", "C"};
    const std::map<std::string, std::string> relabel = {{"A", "zeta"}, {"B", "alpha"}, {"C", "mid"}};
    for (int trial = 0; trial < 100; ++trial) {
        Strings t, p, t2, p2;
        for (int i = 0; i < 20; ++i) {
            t.push_back(names[rng::uniform_index(engine, 3)]);
            p.push_back(names[rng::uniform_index(engine, 3)]);
            t2.push_back(relabel.at(t.back()));
            p2.push_back(relabel.at(p.back()));
        }
        const auto a = evaluate(t, p);
        const auto b = evaluate(t2, p2);
        CHECK(a.f1 == doctest::Approx(b.f1).epsilon(1e-15));
        CHECK(a.precision == doctest::Approx(b.precision).epsilon(1e-15));
        CHECK(a.recall == doctest::Approx(b.recall).epsilon(1e-15));
    }
}

TEST_CASE("label CSV") {
    const auto rows = parse_labels("url,category\nhttp://www.gamespot.com/ps/,Games\nhttps://www.gamefun.com,Games\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == LabeledUrl{"https://www.gamefun.com", "Games"});
    CHECK(parse_labels(serialize_labels(rows)) == rows);
    CHECK_THROWS_AS(parse_labels("url,label\nx,y\n"), Error);
    CHECK_THROWS_AS(parse_labels("url,category\nx\n"), Error);
    CHECK_THROWS_AS(parse_labels("url,category\nx,\n"), Error);
}

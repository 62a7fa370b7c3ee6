import math
import os

import pytest

import frecency as fr

DATA = os.environ.get("FRECENCY_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_half_life():
    assert fr.visit_value(100, 30) == pytest.approx(50.0, abs=1e-9)
    assert fr.visit_value(80, 60) == pytest.approx(20.0, abs=1e-9)
    assert fr.frecency_score([(100, 0), (100, 30)]) == pytest.approx(150.0)
    assert fr.decay_constant() == pytest.approx(math.log(2) / 30)


def test_history_round_trip_and_errors():
    text = (
        "url,first_visit,last_visit,visit_count,frecency\n"
        "https://web.facebook.com/,1521241972,1522351859,177,56640\n"
    )
    records = fr.parse_history(text)
    assert records[0].frecency == 56640
    assert fr.parse_history(fr.serialize_history(records)) == records

    with pytest.raises(fr.FrecencyError) as err:
        fr.parse_history("url,first_visit,last_visit,visit_count,frecency\nhttp://x.com/,200,100,1,5\n")
    assert err.value.kind == "InvariantViolation"
    assert err.value.line == 2


def test_regression_recovers_a_line():
    model = fr.fit_regression([[1], [2], [3]], [2, 4, 6])
    assert fr.predict(model, [5]) == pytest.approx(10.0, abs=1e-12)
    m = fr.metrics([1, 2, 3], [1, 2, 3])
    assert m.r2 == 1.0 and m.mse == 0.0

    history = fr.synth_history(300, seed=4)
    fitted = fr.fit_history(history)
    assert len(fitted.theta) == 4
    assert fr.LinearModel.from_json(fitted.to_json()).theta == fitted.theta


def test_link_prediction_order():
    links = [
        fr.ScoredLink("http://localhost:8000/home", 13, 2274.1109),
        fr.ScoredLink("http://localhost/phpmyadmin/", 16, 2906.7627),
        fr.ScoredLink("https://github.com/", 40, 9000.0),
        fr.ScoredLink("http://localhost:8888/tree", 15, 2717.497),
    ]
    got = [l.url for l in fr.predict_links("loc", links)]
    assert got == ["http://localhost/phpmyadmin/", "http://localhost:8888/tree", "http://localhost:8000/home"]


def test_classifier_on_toy_corpus():
    corpus = [fr.LabeledUrl("game fun", "Games"), fr.LabeledUrl("game play", "Games"),
              fr.LabeledUrl("drive code", "Computers")]
    assert fr.tokenize_url("https://Game.com/Play-Now") == ["https", "game", "com", "play", "now"]
    assert fr.extract_ngrams(["a", "b", "c"], 1, 2) == ["a", "b", "c", "a b", "b c"]

    model = fr.train_classifier(corpus, alpha=1.0)
    pred = fr.predict_mnb(model, "game play")
    assert pred.category == "Games"
    # Games: game x2, fun, play over a 5-term vocabulary, alpha 1.
    assert pred.log_scores[0] == pytest.approx(math.log(2 / 3) + math.log(3 / 9) + math.log(2 / 9), abs=1e-12)

    report = fr.evaluate(["a", "b"], ["a", "a"])
    assert report.accuracy == 0.5
    with pytest.raises(fr.FrecencyError):
        fr.train_classifier(corpus, alpha=0.0)


def test_search_accepts_python_callables():
    out = fr.random_search(list(range(11)), 100, lambda x: (x - 3) ** 2, seed=0)
    assert out["best"] == 3
    assert len(out["log"]) == 100
    trajectory = [row["current_objective"] for row in out["log"]]
    assert all(b <= a for a, b in zip(trajectory, trajectory[1:]))

    annealed = fr.annealed_search(["a", "b", "c"], 20, {"a": 2.0, "b": 0.0, "c": 1.0}.get, seed=1)
    assert annealed["best"] == "b"

    folds = fr.kfold_split(10, 3, seed=0)
    assert sorted(i for f in folds for i in f) == list(range(10))
    assert len(fr.default_search_space()) == 8


def test_cross_validate_on_fixture():
    with open(os.path.join(DATA, "dmoz_sample.csv")) as fh:
        corpus = fr.parse_labels(fh.read())
    result = fr.cross_validate(corpus[:400] + corpus[400:800], fr.HyperParams(1, 1, True, 1.0), k=5, seed=1)
    assert len(result.fold_scores) == 5
    assert 0.0 <= result.mean_score <= 1.0


def test_category_ranking_and_recommendations():
    links = [
        fr.CategorizedLink("https://web.facebook.com/", 543, 102108.26, "Computers"),
        fr.CategorizedLink("http://codeforces.com/contests", 21, 3650.896, "Arts"),
        fr.CategorizedLink("https://www.floydhub.com/jobs", 4, 665.371, "Business"),
    ]
    ranked = fr.rank_categories(fr.category_probabilities(fr.category_totals(links)))
    assert [s.category for s in ranked] == ["Computers", "Arts", "Business"]
    assert sum(s.probability for s in ranked) == pytest.approx(1.0, abs=1e-9)

    catalog = fr.parse_catalog("category,url\nComputers,https://twitter.com\nComputers,https://reddit.com\n")
    recs = fr.recommend(ranked, catalog, visited=["https://twitter.com"], k=3)
    assert recs[0].category == "Computers"
    assert recs[0].urls == ["https://reddit.com"]

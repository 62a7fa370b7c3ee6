"""Frecency regression, URL classification and category recommendations."""

from ._core import (
    CategorizedLink,
    CategoryScore,
    Catalog,
    ClassificationReport,
    FrecencyError,
    HistoryRecord,
    HyperParams,
    LabeledUrl,
    LinearModel,
    MnbModel,
    Prediction,
    Recommendation,
    RegressionMetrics,
    ScoredLink,
    TrialResult,
    accuracy,
    annealed_search,
    category_probabilities,
    category_totals,
    cross_validate,
    decay_constant,
    default_search_space,
    evaluate,
    extract_ngrams,
    fit_history,
    fit_regression,
    frecency_score,
    kfold_split,
    metrics,
    parse_catalog,
    parse_history,
    parse_labels,
    predict,
    predict_links,
    predict_mnb,
    random_search,
    rank_categories,
    recommend,
    serialize_history,
    synth_history,
    tokenize_url,
    train_classifier,
    visit_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]

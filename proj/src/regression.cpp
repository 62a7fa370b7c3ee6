#include "frecency/regression.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "frecency/error.hpp"

namespace frecency {

namespace {

const std::vector<double>& require_targets(const FeatureMatrix& data) {
    if (!data.targets) throw Error(ErrorKind::DimensionMismatch, "data carries no targets");
    if (data.targets->size() != data.rows) {
        throw Error(ErrorKind::DimensionMismatch, "target count differs from row count");
    }
    return *data.targets;
}

void check_width(const LinearModel& model, std::size_t cols) {
    if (model.feature_count() != cols || model.theta.size() != cols + 1 ||
        model.feature_stds.size() != cols) {
        throw Error(ErrorKind::DimensionMismatch,
                    "model expects " + std::to_string(model.feature_count()) + " features, got " +
                        std::to_string(cols));
    }
}

}  // namespace

std::vector<double> solve_linear_system(std::vector<double> a, std::vector<double> b) {
    const std::size_t k = b.size();
    if (a.size() != k * k) throw Error(ErrorKind::DimensionMismatch, "system is not square");

    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r) {
            if (std::abs(a[r * k + col]) > std::abs(a[pivot * k + col])) pivot = r;
        }
        if (std::abs(a[pivot * k + col]) < kPivotTolerance) {
            throw Error(ErrorKind::SingularMatrix,
                        "pivot below tolerance at column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < k; ++c) std::swap(a[col * k + c], a[pivot * k + c]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < k; ++r) {
            const double factor = a[r * k + col] / a[col * k + col];
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < k; ++c) a[r * k + c] -= factor * a[col * k + c];
            b[r] -= factor * b[col];
        }
    }

    std::vector<double> x(k);
    for (std::size_t i = k; i-- > 0;) {
        double sum = b[i];
        for (std::size_t c = i + 1; c < k; ++c) sum -= a[i * k + c] * x[c];
        x[i] = sum / a[i * k + i];
    }
    return x;
}

LinearModel fit_normal_equation(const FeatureMatrix& data) {
    const auto& y = require_targets(data);
    const std::size_t n = data.rows;
    const std::size_t m = data.cols;
    if (n < m + 1) {
        throw Error(ErrorKind::TooFewRows, std::to_string(n) + " rows for " +
                                               std::to_string(m + 1) + " coefficients");
    }

    LinearModel model;
    model.feature_means.assign(m, 0.0);
    model.feature_stds.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += data.at(i, j);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = data.at(i, j) - mean;
            var += d * d;
        }
        const double sd = std::sqrt(var / static_cast<double>(n));
        if (!(sd > 0.0)) {
            throw Error(ErrorKind::ConstantFeature, "feature has zero variance", std::nullopt,
                        std::to_string(j));
        }
        model.feature_means[j] = mean;
        model.feature_stds[j] = sd;
    }
    model.theta.assign(m + 1, 0.0);

    const std::size_t k = m + 1;
    const auto x = standardized_design(model, data);
    std::vector<double> xtx(k * k, 0.0);
    std::vector<double> xty(k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = &x[i * k];
        for (std::size_t a = 0; a < k; ++a) {
            xty[a] += row[a] * y[i];
            for (std::size_t b = a; b < k; ++b) xtx[a * k + b] += row[a] * row[b];
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < a; ++b) xtx[a * k + b] = xtx[b * k + a];
    }

    model.theta = solve_linear_system(std::move(xtx), std::move(xty));
    return model;
}

double predict(const LinearModel& model, std::span<const double> x) {
    check_width(model, x.size());
    double h = model.theta[0];
    for (std::size_t j = 0; j < x.size(); ++j) {
        h += model.theta[j + 1] * (x[j] - model.feature_means[j]) / model.feature_stds[j];
    }
    return h;
}

std::vector<double> predict_all(const LinearModel& model, const FeatureMatrix& data) {
    check_width(model, data.cols);
    std::vector<double> out(data.rows);
    for (std::size_t i = 0; i < data.rows; ++i) out[i] = predict(model, data.row(i));
    return out;
}

std::vector<double> standardized_design(const LinearModel& model, const FeatureMatrix& data) {
    check_width(model, data.cols);
    const std::size_t k = data.cols + 1;
    std::vector<double> x(data.rows * k);
    for (std::size_t i = 0; i < data.rows; ++i) {
        x[i * k] = 1.0;
        for (std::size_t j = 0; j < data.cols; ++j) {
            x[i * k + j + 1] = (data.at(i, j) - model.feature_means[j]) / model.feature_stds[j];
        }
    }
    return x;
}

double cost(const LinearModel& model, const FeatureMatrix& data) {
    const auto& y = require_targets(data);
    check_width(model, data.cols);
    double sum = 0.0;
    for (std::size_t i = 0; i < data.rows; ++i) {
        const double r = predict(model, data.row(i)) - y[i];
        sum += r * r;
    }
    return sum / (2.0 * static_cast<double>(data.rows));
}

std::vector<double> cost_gradient(const LinearModel& model, const FeatureMatrix& data) {
    const auto& y = require_targets(data);
    const auto x = standardized_design(model, data);
    const std::size_t k = data.cols + 1;
    std::vector<double> grad(k, 0.0);
    for (std::size_t i = 0; i < data.rows; ++i) {
        double h = 0.0;
        for (std::size_t a = 0; a < k; ++a) h += x[i * k + a] * model.theta[a];
        const double r = h - y[i];
        for (std::size_t a = 0; a < k; ++a) grad[a] += x[i * k + a] * r;
    }
    for (auto& g : grad) g /= static_cast<double>(data.rows);
    return grad;
}

RegressionMetrics metrics(std::span<const double> y_true, std::span<const double> y_pred) {
    if (y_true.size() != y_pred.size()) {
        throw Error(ErrorKind::DimensionMismatch, "y_true and y_pred differ in length");
    }
    const std::size_t n = y_true.size();
    if (n < 2) throw Error(ErrorKind::TooFewRows, "metrics need at least 2 samples");

    double mean = 0.0;
    for (double v : y_true) mean += v;
    mean /= static_cast<double>(n);

    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y_true[i] - y_pred[i];
        const double d = y_true[i] - mean;
        ss_res += r * r;
        ss_tot += d * d;
    }
    if (ss_tot == 0.0) throw Error(ErrorKind::ConstantTarget, "y_true has zero variance");

    RegressionMetrics out;
    out.mse = ss_res / static_cast<double>(n);
    out.rmse = std::sqrt(out.mse);
    out.r2 = 1.0 - ss_res / ss_tot;
    return out;
}

}  // namespace frecency

#pragma once

#include <span>
#include <vector>

#include "frecency/history.hpp"

namespace frecency {

// Hypothesis h(x) = theta . [1, (x - mean) / std]. theta[0] is the bias.
struct LinearModel {
    std::vector<double> theta;
    std::vector<double> feature_means;
    std::vector<double> feature_stds;

    std::size_t feature_count() const { return feature_means.size(); }
};

struct RegressionMetrics {
    double mse = 0.0;
    double rmse = 0.0;
    double r2 = 0.0;
};

// Pivots with magnitude below this are treated as rank deficiency.
inline constexpr double kPivotTolerance = 1e-10;

// Least-squares fit of a bias-augmented linear model on z-scored features by
// solving (X^T X) theta = X^T y with partial-pivot elimination.
// Throws Error(TooFewRows | ConstantFeature | SingularMatrix | DimensionMismatch).
LinearModel fit_normal_equation(const FeatureMatrix& data);

// Throws Error(DimensionMismatch).
double predict(const LinearModel& model, std::span<const double> x);
std::vector<double> predict_all(const LinearModel& model, const FeatureMatrix& data);

// n x (m+1) row-major design: a ones column then the standardized features.
std::vector<double> standardized_design(const LinearModel& model, const FeatureMatrix& data);

// J(theta) = 1/(2n) sum (h(x_i) - y_i)^2 over the n samples.
double cost(const LinearModel& model, const FeatureMatrix& data);

// dJ/dtheta = (1/n) X^T (X theta - y) on the standardized design.
std::vector<double> cost_gradient(const LinearModel& model, const FeatureMatrix& data);

// Throws Error(DimensionMismatch | TooFewRows | ConstantTarget).
RegressionMetrics metrics(std::span<const double> y_true, std::span<const double> y_pred);

// Solves a dense k x k system (row-major) in place by Gaussian elimination
// with partial pivoting. Throws Error(SingularMatrix).
std::vector<double> solve_linear_system(std::vector<double> a, std::vector<double> b);

}  // namespace frecency

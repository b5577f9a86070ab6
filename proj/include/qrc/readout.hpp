#pragma once

#include <Eigen/Dense>
#include <optional>

#include "qrc/dataio.hpp"

namespace qrc {

struct RidgeModel {
  // One weight per feature, followed by the intercept (0 when disabled).
  Eigen::VectorXd weights;
  double gamma = 0.0;
  bool intercept = true;
  // Set when the normal equations were rank-deficient and the fit fell back
  // to a minimum-norm least-squares solve.
  bool fallback_solve = false;
};

// Minimize sum_t (y_t - w.x_t - b)^2 + gamma ||w||^2; the intercept b is not
// penalized. gamma = 0 with a singular system falls back to the pseudoinverse
// solution and flags the model.
RidgeModel fit_ridge(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                     double gamma, bool with_intercept = true);

Eigen::VectorXd predict(const RidgeModel& model, const Eigen::MatrixXd& x);

// Mean absolute error, in the units of its inputs.
double mae(const Eigen::VectorXd& y_true, const Eigen::VectorXd& y_pred);

// Fraction of steps whose predicted direction of change matches the actual
// one. y_prev holds the current value aligned with each target; changes of
// magnitude <= tie_eps count as flat (their own direction class).
double mda(const Eigen::VectorXd& y_true, const Eigen::VectorXd& y_pred,
           const Eigen::VectorXd& y_prev, double tie_eps = 0.0);

struct ForecastReport {
  double mae = 0.0;         // EUR/kg when a scaler is supplied
  double mae_scaled = 0.0;  // in the model's [0,1] working units
  double mda = 0.0;
  Eigen::VectorXd predictions;  // unscaled when a scaler is supplied
};

// Predict on x, then measure against y/y_prev. Inputs are in scaled units;
// when a scaler is given the predictions and truths are mapped back before
// the headline MAE so it reads in EUR/kg.
ForecastReport evaluate(const RidgeModel& model, const Eigen::MatrixXd& x,
                        const Eigen::VectorXd& y, const Eigen::VectorXd& y_prev,
                        const std::optional<Scaler>& scaler = std::nullopt,
                        double tie_eps = 0.0);

}  // namespace qrc

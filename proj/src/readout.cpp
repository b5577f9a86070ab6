#include "qrc/readout.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qrc {

RidgeModel fit_ridge(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                     double gamma, bool with_intercept) {
  if (x.rows() != y.size()) {
    throw std::invalid_argument("design matrix has " + std::to_string(x.rows()) +
                                " rows but " + std::to_string(y.size()) +
                                " targets");
  }
  if (x.rows() < 2) throw std::invalid_argument("need at least 2 samples");
  if (gamma < 0.0) throw std::invalid_argument("gamma must be nonnegative");

  const Eigen::Index p = x.cols();

  // An unpenalized intercept is equivalent to ridge on centered data with
  // the intercept recovered afterwards, so both paths share one solve.
  Eigen::RowVectorXd x_mean = Eigen::RowVectorXd::Zero(p);
  double y_mean = 0.0;
  if (with_intercept) {
    x_mean = x.colwise().mean();
    y_mean = y.mean();
  }
  const Eigen::MatrixXd xc = x.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;

  // Spectral form of the ridge solution: w = V diag(s/(s^2+gamma)) U^T y.
  // Stays accurate when feature columns are tiny or nearly collinear, which
  // plain normal equations do not.
  Eigen::BDCSVD<Eigen::MatrixXd> svd(xc, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const Eigen::VectorXd uty = svd.matrixU().transpose() * yc;
  const double rank_tol =
      std::numeric_limits<double>::epsilon() * static_cast<double>(x.rows()) *
      (s.size() > 0 ? s[0] : 0.0);
  bool truncated = false;
  Eigen::VectorXd shrunk(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (gamma > 0.0) {
      shrunk[i] = s[i] / (s[i] * s[i] + gamma) * uty[i];
    } else if (s[i] > rank_tol) {
      shrunk[i] = uty[i] / s[i];
    } else {
      // gamma = 0 and a numerically zero direction: pseudoinverse behaviour.
      shrunk[i] = 0.0;
      truncated = true;
    }
  }
  const Eigen::VectorXd w = svd.matrixV() * shrunk;

  RidgeModel model;
  model.gamma = gamma;
  model.intercept = with_intercept;
  model.fallback_solve = truncated;
  model.weights = Eigen::VectorXd::Zero(p + 1);
  model.weights.head(p) = w;
  if (with_intercept) model.weights[p] = y_mean - x_mean.dot(w);
  if (!model.weights.allFinite()) {
    throw std::runtime_error("ridge solve produced non-finite weights");
  }
  return model;
}

Eigen::VectorXd predict(const RidgeModel& model, const Eigen::MatrixXd& x) {
  const Eigen::Index p = model.weights.size() - 1;
  if (x.cols() != p) {
    throw std::invalid_argument("model expects " + std::to_string(p) +
                                " features, got " + std::to_string(x.cols()));
  }
  return (x * model.weights.head(p)).array() + model.weights[p];
}

double mae(const Eigen::VectorXd& y_true, const Eigen::VectorXd& y_pred) {
  if (y_true.size() != y_pred.size() || y_true.size() == 0) {
    throw std::invalid_argument("mae needs equal-length nonempty inputs (" +
                                std::to_string(y_true.size()) + " vs " +
                                std::to_string(y_pred.size()) + ")");
  }
  return (y_true - y_pred).cwiseAbs().mean();
}

namespace {

int direction(double delta, double tie_eps) {
  if (std::abs(delta) <= tie_eps) return 0;
  return delta > 0.0 ? 1 : -1;
}

}  // namespace

double mda(const Eigen::VectorXd& y_true, const Eigen::VectorXd& y_pred,
           const Eigen::VectorXd& y_prev, double tie_eps) {
  if (y_true.size() != y_pred.size() || y_true.size() != y_prev.size() ||
      y_true.size() == 0) {
    throw std::invalid_argument("mda needs equal-length nonempty inputs (" +
                                std::to_string(y_true.size()) + ", " +
                                std::to_string(y_pred.size()) + ", " +
                                std::to_string(y_prev.size()) + ")");
  }
  Eigen::Index hits = 0;
  for (Eigen::Index i = 0; i < y_true.size(); ++i) {
    if (direction(y_pred[i] - y_prev[i], tie_eps) ==
        direction(y_true[i] - y_prev[i], tie_eps)) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

ForecastReport evaluate(const RidgeModel& model, const Eigen::MatrixXd& x,
                        const Eigen::VectorXd& y, const Eigen::VectorXd& y_prev,
                        const std::optional<Scaler>& scaler, double tie_eps) {
  ForecastReport report;
  Eigen::VectorXd pred = predict(model, x);
  report.mae_scaled = mae(y, pred);
  if (scaler) {
    auto unscale = [&](const Eigen::VectorXd& v) {
      Eigen::VectorXd out(v.size());
      for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = scaler->invert(v[i]);
      return out;
    };
    const Eigen::VectorXd pred_u = unscale(pred);
    const Eigen::VectorXd y_u = unscale(y);
    report.mae = mae(y_u, pred_u);
    report.mda = mda(y_u, pred_u, unscale(y_prev), tie_eps);
    report.predictions = pred_u;
  } else {
    report.mae = report.mae_scaled;
    report.mda = mda(y, pred, y_prev, tie_eps);
    report.predictions = std::move(pred);
  }
  return report;
}

}  // namespace qrc

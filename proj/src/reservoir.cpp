#include "qrc/reservoir.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace qrc {

void validate_config(const ReservoirConfig& config) {
  if (config.n_qubits < 2 || config.n_qubits > kMaxQubits) {
    throw std::invalid_argument("reservoir needs 2.." + std::to_string(kMaxQubits) +
                                " qubits, got " + std::to_string(config.n_qubits));
  }
  if (config.input_qubits < 1 || config.input_qubits >= config.n_qubits) {
    // The memory qubits are what carries information between steps.
    throw std::invalid_argument("input qubits must satisfy 1 <= n < N");
  }
  if (config.n_v < 1) throw std::invalid_argument("n_v must be >= 1");
  if (config.washout < 0) throw std::invalid_argument("washout must be >= 0");
  const int evo_qubits = std::holds_alternative<Circuit>(config.evolution)
                             ? std::get<Circuit>(config.evolution).n_qubits
                             : std::get<IsingSpec>(config.evolution).n_qubits;
  if (evo_qubits != config.n_qubits) {
    throw std::invalid_argument("evolution acts on " + std::to_string(evo_qubits) +
                                " qubits, reservoir has " +
                                std::to_string(config.n_qubits));
  }
}

DensityMatrix init_state(const ReservoirConfig& config) {
  validate_config(config);
  return zero_state(config.n_qubits);
}

std::vector<Eigen::MatrixXcd> segment_unitaries(const ReservoirConfig& config) {
  validate_config(config);
  std::vector<Eigen::MatrixXcd> segs;
  if (const auto* circuit = std::get_if<Circuit>(&config.evolution)) {
    for (const Circuit& part : segment(*circuit, config.n_v)) {
      segs.push_back(compile(part));
    }
  } else {
    const auto& spec = std::get<IsingSpec>(config.evolution);
    segs = intermediate_unitaries(spec, spec.time, config.n_v);
  }
  for (const auto& u : segs) {
    const double err = unitarity_error(u);
    if (err > 1e-8) {
      throw std::runtime_error("segment unitary fails the unitarity check: " +
                               std::to_string(err));
    }
  }
  return segs;
}

StepResult step(const DensityMatrix& prev, double y, const ReservoirConfig& config,
                const std::vector<Eigen::MatrixXcd>& segments) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw std::domain_error("series value " + std::to_string(y) +
                            " outside [0, 1]; scale the series first");
  }
  if (static_cast<int>(segments.size()) != config.n_v) {
    throw std::invalid_argument("expected " + std::to_string(config.n_v) +
                                " segment unitaries, got " +
                                std::to_string(segments.size()));
  }
  const int n = config.n_qubits;
  const StateVector injected = pure_input_state(y, config.input_qubits);
  const DensityMatrix memory = partial_trace_first(prev, config.input_qubits);
  DensityMatrix rho = tensor_product(density_from_pure(injected), memory);

  StepResult result;
  result.features.resize(2 * n * config.n_v);
  Eigen::Index col = 0;
  for (const auto& u : segments) {
    rho = conjugate_unchecked(rho, u);
    for (int q = 0; q < n; ++q) {
      result.features[col++] = expval_pauli(rho, {PauliAxis::X, q});
      result.features[col++] = expval_pauli(rho, {PauliAxis::Z, q});
    }
  }
  result.state = std::move(rho);
  return result;
}

FeatureMatrix run_series(const std::vector<double>& series,
                         const ReservoirConfig& config,
                         const Eigen::MatrixXd* regressors,
                         const std::vector<std::string>* regressor_names) {
  validate_config(config);
  const auto len = static_cast<Eigen::Index>(series.size());
  if (len <= config.washout) {
    throw std::invalid_argument("series of " + std::to_string(series.size()) +
                                " steps is shorter than the washout of " +
                                std::to_string(config.washout));
  }
  Eigen::Index n_reg = 0;
  if (regressors) {
    if (regressors->rows() != len) {
      throw std::invalid_argument("series has " + std::to_string(series.size()) +
                                  " steps but regressors have " +
                                  std::to_string(regressors->rows()) + " rows");
    }
    n_reg = regressors->cols();
  }

  const int n = config.n_qubits;
  const Eigen::Index n_feat = 2 * n * config.n_v;
  const auto segments = segment_unitaries(config);

  FeatureMatrix out;
  out.values.resize(len - config.washout, n_feat + n_reg);
  for (int s = 0; s < config.n_v; ++s) {
    for (int q = 0; q < n; ++q) {
      out.columns.push_back("seg" + std::to_string(s) + "_q" + std::to_string(q) + "_X");
      out.columns.push_back("seg" + std::to_string(s) + "_q" + std::to_string(q) + "_Z");
    }
  }
  for (Eigen::Index j = 0; j < n_reg; ++j) {
    out.columns.push_back(regressor_names && j < static_cast<Eigen::Index>(regressor_names->size())
                              ? (*regressor_names)[static_cast<std::size_t>(j)]
                              : "reg" + std::to_string(j));
  }

  DensityMatrix rho = init_state(config);
  for (Eigen::Index t = 0; t < len; ++t) {
    StepResult r = step(rho, series[static_cast<std::size_t>(t)], config, segments);
    rho = std::move(r.state);
    if (t < config.washout) continue;
    const Eigen::Index row = t - config.washout;
    for (Eigen::Index c = 0; c < n_feat; ++c) {
      const double v = r.features[c];
      if (!std::isfinite(v) || std::abs(v) > 1.0 + 1e-9) {
        throw std::runtime_error("feature " + out.columns[static_cast<std::size_t>(c)] +
                                 " out of range at step " + std::to_string(t) +
                                 ": " + std::to_string(v));
      }
      out.values(row, c) = v;
    }
    if (n_reg > 0) {
      out.values.block(row, n_feat, 1, n_reg) = regressors->row(t);
    }
  }
  return out;
}

void write_features_csv(const FeatureMatrix& features, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  for (std::size_t i = 0; i < features.columns.size(); ++i) {
    if (i) out << ',';
    out << features.columns[i];
  }
  out << '\n';
  char buf[64];
  for (Eigen::Index r = 0; r < features.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < features.values.cols(); ++c) {
      if (c) out << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", features.values(r, c));
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace qrc

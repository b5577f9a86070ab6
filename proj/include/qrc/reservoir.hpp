#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "qrc/gates.hpp"
#include "qrc/ising.hpp"
#include "qrc/qstate.hpp"

namespace qrc {

// One reservoir: N qubits, the first `input_qubits` re-encoded each step,
// the rest carrying memory through the evolution. The evolution is either a
// sampled circuit or an Ising-model time evolution; either way each step is
// divided into n_v sub-steps with a readout after each.
struct ReservoirConfig {
  int n_qubits = 7;
  int input_qubits = 1;
  int n_v = 2;
  int washout = 10;  // leading steps dropped from the feature matrix
  std::variant<Circuit, IsingSpec> evolution;
  std::uint64_t seed = 0;
};

void validate_config(const ReservoirConfig& config);

// rho(0) = |0...0><0...0|.
DensityMatrix init_state(const ReservoirConfig& config);

// The n_v per-sub-step unitaries: balanced gate-list segments for circuits,
// equal time slices for the Ising evolution. Each matrix is checked for
// unitarity here so the step loop can skip the check.
std::vector<Eigen::MatrixXcd> segment_unitaries(const ReservoirConfig& config);

struct StepResult {
  DensityMatrix state;
  Eigen::VectorXd features;  // 2 N n_v values, segment-major, X before Z
};

// One time step: re-encode the input qubits with y, keep the memory qubits'
// reduced state, evolve segment by segment collecting <X_i>, <Z_i> after
// each. y must already be scaled into [0, 1].
StepResult step(const DensityMatrix& prev, double y, const ReservoirConfig& config,
                const std::vector<Eigen::MatrixXcd>& segments);

struct FeatureMatrix {
  Eigen::MatrixXd values;  // rows: retained steps; cols: features [+ regressors]
  std::vector<std::string> columns;
};

// Feed the whole series through the reservoir, drop the washout rows, and
// append regressor columns (one row per series step, already scaled) when
// provided.
FeatureMatrix run_series(const std::vector<double>& series,
                         const ReservoirConfig& config,
                         const Eigen::MatrixXd* regressors = nullptr,
                         const std::vector<std::string>* regressor_names = nullptr);

void write_features_csv(const FeatureMatrix& features, const std::string& path);

}  // namespace qrc

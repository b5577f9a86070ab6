#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qrc/reservoir.hpp"
#include "test_helpers.hpp"

using namespace qrc;
using namespace qrc::testing;

namespace {

ReservoirConfig identity_config(int n_qubits, int n_v = 1) {
  ReservoirConfig config;
  config.n_qubits = n_qubits;
  config.n_v = n_v;
  config.washout = 0;
  config.evolution = sample_circuit(Family::G1, n_qubits, 0, 0);
  return config;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.entries - b.entries);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace

TEST_CASE("initial state is the computational zero state") {
  CHECK(max_abs_diff(init_state(identity_config(2)).entries,
                     (Eigen::MatrixXcd(4, 4) << 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                      0, 0, 0, 0)
                         .finished()) == 0.0);
  const DensityMatrix big = init_state(identity_config(7));
  CHECK(big.entries(0, 0).real() == 1.0);
  CHECK(trace_error(big) == 0.0);
}

TEST_CASE("config validation") {
  ReservoirConfig config = identity_config(3);
  config.input_qubits = 3;
  CHECK_THROWS_AS(validate_config(config), std::invalid_argument);
  config.input_qubits = 1;
  config.n_v = 0;
  CHECK_THROWS_AS(validate_config(config), std::invalid_argument);
  config.n_v = 1;
  config.evolution = sample_circuit(Family::G1, 4, 0, 0);  // wrong width
  CHECK_THROWS_AS(validate_config(config), std::invalid_argument);
}

TEST_CASE("one step with identity evolution reads the injected state") {
  const ReservoirConfig config = identity_config(2);
  const auto segments = segment_unitaries(config);
  const StepResult r = step(init_state(config), 0.5, config, segments);
  CHECK(r.features[0] == doctest::Approx(1.0));   // <X> of the fresh qubit
  CHECK(r.features[1] == doctest::Approx(0.0));   // <Z> of the fresh qubit
  CHECK(r.features[2] == doctest::Approx(0.0));   // memory qubit stays |0>
  CHECK(r.features[3] == doctest::Approx(1.0));
}

TEST_CASE("injection keeps the memory qubits' reduced state") {
  Rng rng(1);
  const ReservoirConfig config = identity_config(3);
  const auto segments = segment_unitaries(config);
  const DensityMatrix prev = random_density(3, rng);
  const StepResult r = step(prev, 0.3, config, segments);
  CHECK(max_abs_diff(partial_trace_first(r.state, 1).entries,
                     partial_trace_first(prev, 1).entries) < 1e-12);
}

TEST_CASE("zero input with identity evolution is a fixed point") {
  const ReservoirConfig config = identity_config(3);
  const auto segments = segment_unitaries(config);
  DensityMatrix rho = init_state(config);
  for (int t = 0; t < 5; ++t) {
    const StepResult r = step(rho, 0.0, config, segments);
    rho = r.state;
    CHECK(max_abs_diff(rho.entries, init_state(config).entries) < 1e-14);
  }
}

TEST_CASE("step rejects unscaled inputs") {
  const ReservoirConfig config = identity_config(2);
  const auto segments = segment_unitaries(config);
  CHECK_THROWS_AS(step(init_state(config), 1.2, config, segments), std::domain_error);
  CHECK_THROWS_AS(step(init_state(config), -0.2, config, segments), std::domain_error);
}

TEST_CASE("injection is contractive in trace distance") {
  Rng rng(2);
  ReservoirConfig config = identity_config(4);
  config.evolution = sample_circuit(Family::G3, 4, 30, 17);
  const auto segments = segment_unitaries(config);
  for (int pair = 0; pair < 100; ++pair) {
    DensityMatrix a = random_density(4, rng);
    DensityMatrix b = random_density(4, rng);
    for (int t = 0; t < 3; ++t) {
      const double before = trace_distance(a, b);
      const double y = rng.uniform();
      a = step(a, y, config, segments).state;
      b = step(b, y, config, segments).state;
      CHECK(trace_distance(a, b) <= before + 1e-12);
    }
  }
}

TEST_CASE("run_series yields the documented shape and column names") {
  ReservoirConfig config;
  config.n_qubits = 7;
  config.n_v = 2;
  config.washout = 10;
  config.evolution = sample_circuit(Family::G1, 7, 20, 3);
  std::vector<double> series(356);
  Rng rng(3);
  for (auto& v : series) v = rng.uniform();

  const FeatureMatrix f = run_series(series, config);
  CHECK(f.values.rows() == 346);
  CHECK(f.values.cols() == 28);
  CHECK(f.columns.size() == 28);
  CHECK(f.columns[0] == "seg0_q0_X");
  CHECK(f.columns[1] == "seg0_q0_Z");
  CHECK(f.columns[27] == "seg1_q6_Z");
  CHECK(f.values.cwiseAbs().maxCoeff() <= 1.0 + 1e-9);
  CHECK(f.values.allFinite());

  Eigen::MatrixXd regs(356, 9);
  regs.setRandom();
  std::vector<std::string> names;
  for (int i = 0; i < 9; ++i) names.push_back("r" + std::to_string(i));
  const FeatureMatrix g = run_series(series, config, &regs, &names);
  CHECK(g.values.rows() == 346);
  CHECK(g.values.cols() == 37);
  CHECK(g.columns[28] == "r0");
  CHECK(g.values(0, 28) == regs(10, 0));
}

TEST_CASE("constant input with identity evolution gives identical rows") {
  ReservoirConfig config = identity_config(3);
  config.washout = 2;
  std::vector<double> series(20, 0.4);
  const FeatureMatrix f = run_series(series, config);
  for (Eigen::Index r = 1; r < f.values.rows(); ++r) {
    CHECK((f.values.row(r) - f.values.row(0)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("run_series is deterministic") {
  ReservoirConfig config;
  config.n_qubits = 4;
  config.n_v = 2;
  config.washout = 3;
  config.evolution = sample_circuit(Family::MG, 4, 10, 5);
  std::vector<double> series(40);
  Rng rng(4);
  for (auto& v : series) v = rng.uniform();
  const FeatureMatrix a = run_series(series, config);
  const FeatureMatrix b = run_series(series, config);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("run_series rejects misaligned regressors and long washouts") {
  ReservoirConfig config = identity_config(2);
  std::vector<double> series(20, 0.5);
  Eigen::MatrixXd regs(19, 2);
  regs.setZero();
  CHECK_THROWS_WITH_AS(run_series(series, config, &regs), doctest::Contains("19"),
                       std::invalid_argument);
  config.washout = 20;
  CHECK_THROWS_AS(run_series(series, config), std::invalid_argument);
}

TEST_CASE("ising evolutions drive the reservoir too") {
  ReservoirConfig config;
  config.n_qubits = 3;
  config.n_v = 2;
  config.washout = 0;
  config.evolution = sample_ising(3, 1.0, 0.1, 9);
  const auto segments = segment_unitaries(config);
  REQUIRE(segments.size() == 2);
  const StepResult r = step(init_state(config), 0.7, config, segments);
  CHECK(trace_error(r.state) < 1e-10);
  CHECK(hermiticity_error(r.state) < 1e-10);
  CHECK(r.features.cwiseAbs().maxCoeff() <= 1.0 + 1e-9);
}

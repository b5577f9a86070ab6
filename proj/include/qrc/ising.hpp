#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace qrc {

// Random all-pair transverse-field model: H = sum_{i<j} J_ij Z_i Z_j
// + h sum_i X_i, with J_ij ~ U(-Js/2, Js/2) and h = ratio * Js.
struct IsingSpec {
  int n_qubits = 0;
  Eigen::MatrixXd couplings;    // symmetric, zero diagonal
  double field = 0.0;           // h
  double coupling_scale = 0.0;  // Js
  double time = 10.0;           // evolution lapse T
  std::uint64_t seed = 0;
};

IsingSpec sample_ising(int n_qubits, double js, double ratio,
                       std::uint64_t seed, double time = 10.0);

// Dense real-symmetric Hamiltonian in the computational basis.
Eigen::MatrixXd hamiltonian_matrix(const IsingSpec& spec);

// U = exp(-i H t) by Hermitian eigendecomposition.
Eigen::MatrixXcd evolution_unitary(const IsingSpec& spec, double t);

// n_v equal time slices U(T / n_v); applying them in sequence reproduces
// U(T) up to numerical error.
std::vector<Eigen::MatrixXcd> intermediate_unitaries(const IsingSpec& spec,
                                                     double total_time, int n_v);

// H/T-gate count for one Rz, modelled as ceil(c0 + c1 * log2(1/epsilon)).
int rz_gate_cost(double epsilon, double c0 = 4.0, double c1 = 3.0);

// Trotter steps so the first-order splitting bound (2 T^2 h / r) sum|J_ij|
// stays within `budget`. The budget is a deliberately loose knob of the
// gate-count model, not a simulation accuracy target.
inline constexpr double kTrotterErrorBudget = 12.0;
int default_trotter_steps(const IsingSpec& spec, double total_time,
                          double budget = kTrotterErrorBudget);

// Gates from {CNOT, H, T} to realize exp(-i H T) with first-order Trotter
// steps: each ZZ term costs 2 CNOT + Rz, each field term 2 H + Rz.
std::int64_t estimate_g3_count(const IsingSpec& spec, double total_time,
                               int trotter_steps, double epsilon,
                               double c0 = 4.0, double c1 = 3.0);

// Provenance text: "ISING N seed Js ratio T" then the coupling matrix rows.
std::string ising_to_text(const IsingSpec& spec);
IsingSpec ising_from_text(const std::string& text);

}  // namespace qrc

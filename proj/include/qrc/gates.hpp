#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qrc/qstate.hpp"
#include "qrc/rng.hpp"

namespace qrc {

enum class GateKind { H, X, S, T, CNOT, Matchgate, Diagonal };

// The seven circuit families. G1/G2/G3 draw uniformly from a three-gate
// generator set; MG draws two-qubit matchgates; D2/D3/DN have a fixed
// structure (Hadamard layer, one diagonal gate per qubit subset, Hadamard
// layer) and ignore the requested gate count.
enum class Family { G1, G2, G3, MG, D2, D3, DN };

std::string to_string(GateKind kind);
std::string to_string(Family family);
Family family_from_string(const std::string& name);

struct Gate {
  GateKind kind = GateKind::H;
  // Targets; CNOT stores {control, target}; Matchgate stores an ascending
  // pair; Diagonal stores an ascending subset.
  std::vector<int> qubits;
  // Matchgate blocks: a acts on span{|00>,|11>}, b on span{|01>,|10>};
  // equal determinants are required.
  Eigen::Matrix2cd a, b;
  // Diagonal phases in [0, 2pi), indexed by the targets' bits with the
  // first listed qubit most significant.
  std::vector<double> phases;
};

struct Circuit {
  int n_qubits = 0;
  Family family = Family::G1;
  std::vector<Gate> gates;
  std::uint64_t seed = 0;
};

// Haar-distributed U(2) draw: unit quaternion for SU(2) plus a uniform
// global phase.
Eigen::Matrix2cd haar_u2(Rng& rng);

// Build a matchgate from two equal-determinant unitary blocks. Throws if a
// block is not unitary or the determinants disagree beyond 1e-10.
Gate make_matchgate(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b,
                    int q1, int q2);

// The 4x4 matrix of a matchgate, basis order |00>,|01>,|10>,|11>.
Eigen::Matrix4cd matchgate_matrix(const Gate& gate);

// Draw a circuit. Deterministic in (family, n_qubits, n_gates, seed); each
// gate consumes its own child stream, so extending n_gates reproduces the
// shorter prefix. n_gates is ignored for D2/D3/DN.
Circuit sample_circuit(Family family, int n_qubits, int n_gates,
                       std::uint64_t seed);

// Structural validation of a sampled circuit against its family rules.
void validate_circuit(const Circuit& circuit);

// Dense unitary of the whole circuit, gates applied in list order.
Eigen::MatrixXcd compile(const Circuit& circuit);

// In-place left-multiplication m <- G m by one gate's embedding.
void apply_gate_left(Eigen::MatrixXcd& m, int n_qubits, const Gate& gate);

// Split the gate list into n_segments contiguous chunks whose lengths differ
// by at most one (earlier chunks take the extra gate). Concatenation equals
// the original sequence.
std::vector<Circuit> segment(const Circuit& circuit, int n_segments);

// True iff conjugating `trials` random Pauli strings by the circuit yields a
// single Pauli string each time (Clifford behaviour). Dense check, n <= 4.
bool is_pauli_conjugation_closed(const Circuit& circuit, int trials);

// Line-oriented provenance format: header "family N seed", then one gate per
// line "KIND q0[,q1,...] [param,...]" with 17-significant-digit reals.
std::string circuit_to_text(const Circuit& circuit);
Circuit circuit_from_text(const std::string& text);

}  // namespace qrc

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace qrc {

using cplx = std::complex<double>;

// Qubit ordering convention, used everywhere: qubit 0 is the leftmost tensor
// factor and the most significant bit of a computational-basis index. For an
// index x on n qubits, the bit of qubit q is (x >> (n - 1 - q)) & 1.
inline int qubit_bit(std::size_t index, int n_qubits, int qubit) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1u);
}

inline std::size_t qubit_mask(int n_qubits, int qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

// Dense simulation is capped here; dimensions grow as 4^n for mixed states.
inline constexpr int kMaxQubits = 10;

struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;
};

struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd entries;

  Eigen::Index dim() const { return entries.rows(); }
};

enum class PauliAxis { X, Z };

struct PauliObservable {
  PauliAxis axis = PauliAxis::Z;
  int qubit = 0;
};

// (sqrt(1-y)|0> + sqrt(y)|1>)^(x n): the product state that encodes one
// scaled sample on the n input qubits. y must lie in [0, 1].
StateVector pure_input_state(double y, int n_qubits);

// rho = psi psi^dag. psi must be normalized.
DensityMatrix density_from_pure(const StateVector& psi);

// |0...0><0...0| on n qubits.
DensityMatrix zero_state(int n_qubits);

// Trace out the first k qubits (the most significant index bits), keeping
// the reduced state of the remaining n - k.
DensityMatrix partial_trace_first(const DensityMatrix& rho, int k);

// Kronecker product a (x) b, with a supplying the leading qubits.
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// U rho U^dag. U must be unitary: ||U U^dag - I||_max <= 1e-8 is enforced.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Eigen::MatrixXcd& u);

// Same conjugation without the unitarity check, for callers that validated
// U once and reapply it in a hot loop.
DensityMatrix conjugate_unchecked(const DensityMatrix& rho, const Eigen::MatrixXcd& u);

// Tr[P rho] for a single-qubit X or Z observable, via index-pair traversal
// (the 2^n x 2^n operator is never materialized).
double expval_pauli(const DensityMatrix& rho, const PauliObservable& p);

// Invariant helpers (mainly for tests and validation paths).
double hermiticity_error(const DensityMatrix& rho);  // max |rho - rho^dag|
double trace_error(const DensityMatrix& rho);        // |Tr rho - 1|
double unitarity_error(const Eigen::MatrixXcd& u);   // ||U U^dag - I||_max

}  // namespace qrc

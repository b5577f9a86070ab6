#include "qrc/qstate.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qrc {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::length_error("qubit count " + std::to_string(n_qubits) +
                            " outside supported range [1, " +
                            std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

StateVector pure_input_state(double y, int n_qubits) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw std::domain_error("input sample " + std::to_string(y) +
                            " outside [0, 1]");
  }
  check_qubit_count(n_qubits);
  const double a0 = std::sqrt(1.0 - y);
  const double a1 = std::sqrt(y);
  const std::size_t dim = std::size_t{1} << n_qubits;
  StateVector psi{n_qubits, Eigen::VectorXcd(static_cast<Eigen::Index>(dim))};
  for (std::size_t x = 0; x < dim; ++x) {
    const int ones = std::popcount(x);
    psi.amplitudes[static_cast<Eigen::Index>(x)] =
        std::pow(a1, ones) * std::pow(a0, n_qubits - ones);
  }
  return psi;
}

DensityMatrix density_from_pure(const StateVector& psi) {
  DensityMatrix rho;
  rho.n_qubits = psi.n_qubits;
  rho.entries = psi.amplitudes * psi.amplitudes.adjoint();
  return rho;
}

DensityMatrix zero_state(int n_qubits) {
  check_qubit_count(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  DensityMatrix rho{n_qubits, Eigen::MatrixXcd::Zero(dim, dim)};
  rho.entries(0, 0) = 1.0;
  return rho;
}

DensityMatrix partial_trace_first(const DensityMatrix& rho, int k) {
  if (k < 1 || k >= rho.n_qubits) {
    throw std::invalid_argument("partial trace over " + std::to_string(k) +
                                " qubits of a " + std::to_string(rho.n_qubits) +
                                "-qubit state");
  }
  const int kept = rho.n_qubits - k;
  const std::size_t dim_kept = std::size_t{1} << kept;
  const std::size_t dim_traced = std::size_t{1} << k;
  DensityMatrix out{kept, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim_kept),
                                                 static_cast<Eigen::Index>(dim_kept))};
  // Leading qubits are the high index bits, so traced blocks are contiguous.
  for (std::size_t a = 0; a < dim_traced; ++a) {
    const std::size_t base = a * dim_kept;
    for (std::size_t i = 0; i < dim_kept; ++i) {
      for (std::size_t j = 0; j < dim_kept; ++j) {
        out.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            rho.entries(static_cast<Eigen::Index>(base + i),
                        static_cast<Eigen::Index>(base + j));
      }
    }
  }
  return out;
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  const int n = a.n_qubits + b.n_qubits;
  if (n > kMaxQubits) {
    throw std::length_error("tensor product of " + std::to_string(a.n_qubits) +
                            " + " + std::to_string(b.n_qubits) +
                            " qubits exceeds the supported maximum of " +
                            std::to_string(kMaxQubits));
  }
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  DensityMatrix out{n, Eigen::MatrixXcd(da * db, da * db)};
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.entries.block(i * db, j * db, db, db) = a.entries(i, j) * b.entries;
    }
  }
  return out;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols() || u.rows() != rho.dim()) {
    throw std::invalid_argument("unitary dimension " + std::to_string(u.rows()) +
                                "x" + std::to_string(u.cols()) +
                                " does not match state dimension " +
                                std::to_string(rho.dim()));
  }
  const double err = unitarity_error(u);
  if (err > 1e-8) {
    throw std::invalid_argument("matrix is not unitary: ||UU^dag - I||_max = " +
                                std::to_string(err));
  }
  return conjugate_unchecked(rho, u);
}

DensityMatrix conjugate_unchecked(const DensityMatrix& rho, const Eigen::MatrixXcd& u) {
  DensityMatrix out;
  out.n_qubits = rho.n_qubits;
  out.entries.noalias() = u * rho.entries * u.adjoint();
  return out;
}

double expval_pauli(const DensityMatrix& rho, const PauliObservable& p) {
  if (p.qubit < 0 || p.qubit >= rho.n_qubits) {
    throw std::invalid_argument("observable qubit " + std::to_string(p.qubit) +
                                " out of range for " + std::to_string(rho.n_qubits) +
                                " qubits");
  }
  const std::size_t dim = static_cast<std::size_t>(rho.dim());
  double val = 0.0;
  if (p.axis == PauliAxis::Z) {
    for (std::size_t x = 0; x < dim; ++x) {
      const double sign = qubit_bit(x, rho.n_qubits, p.qubit) ? -1.0 : 1.0;
      val += sign * rho.entries(static_cast<Eigen::Index>(x),
                                static_cast<Eigen::Index>(x)).real();
    }
  } else {
    const std::size_t mask = qubit_mask(rho.n_qubits, p.qubit);
    // Tr[X_q rho] = sum_x rho[x ^ mask, x]; hermiticity pairs the terms.
    for (std::size_t x = 0; x < dim; ++x) {
      if (x & mask) continue;
      val += 2.0 * rho.entries(static_cast<Eigen::Index>(x | mask),
                               static_cast<Eigen::Index>(x)).real();
    }
  }
  return val;
}

double hermiticity_error(const DensityMatrix& rho) {
  return (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
}

double trace_error(const DensityMatrix& rho) {
  return std::abs(rho.entries.trace() - cplx{1.0, 0.0});
}

double unitarity_error(const Eigen::MatrixXcd& u) {
  Eigen::MatrixXcd gram = u * u.adjoint();
  gram -= Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return gram.cwiseAbs().maxCoeff();
}

}  // namespace qrc

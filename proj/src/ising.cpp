#include "qrc/ising.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qrc/qstate.hpp"
#include "qrc/rng.hpp"

namespace qrc {

IsingSpec sample_ising(int n_qubits, double js, double ratio,
                       std::uint64_t seed, double time) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(n_qubits));
  }
  if (!(js > 0.0)) {
    throw std::invalid_argument("coupling scale must be positive, got " +
                                std::to_string(js));
  }
  if (!(ratio > 0.0)) {
    throw std::invalid_argument("field ratio must be positive, got " +
                                std::to_string(ratio));
  }
  IsingSpec spec;
  spec.n_qubits = n_qubits;
  spec.coupling_scale = js;
  spec.field = ratio * js;
  spec.time = time;
  spec.seed = seed;
  spec.couplings = Eigen::MatrixXd::Zero(n_qubits, n_qubits);
  Rng rng(derive_seed(seed, 0));
  for (int i = 0; i < n_qubits; ++i) {
    for (int j = i + 1; j < n_qubits; ++j) {
      const double jij = rng.uniform(-js / 2.0, js / 2.0);
      spec.couplings(i, j) = jij;
      spec.couplings(j, i) = jij;
    }
  }
  return spec;
}

Eigen::MatrixXd hamiltonian_matrix(const IsingSpec& spec) {
  const int n = spec.n_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t x = 0; x < static_cast<std::size_t>(dim); ++x) {
    double diag = 0.0;
    for (int i = 0; i < n; ++i) {
      const double si = qubit_bit(x, n, i) ? -1.0 : 1.0;
      for (int j = i + 1; j < n; ++j) {
        const double sj = qubit_bit(x, n, j) ? -1.0 : 1.0;
        diag += spec.couplings(i, j) * si * sj;
      }
    }
    h(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = diag;
    for (int i = 0; i < n; ++i) {
      const std::size_t flipped = x ^ qubit_mask(n, i);
      h(static_cast<Eigen::Index>(flipped), static_cast<Eigen::Index>(x)) += spec.field;
    }
  }
  return h;
}

Eigen::MatrixXcd evolution_unitary(const IsingSpec& spec, double t) {
  if (t < 0.0) throw std::invalid_argument("evolution time must be nonnegative");
  const Eigen::MatrixXd h = hamiltonian_matrix(spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const Eigen::Index dim = h.rows();
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    phases[i] = std::polar(1.0, -es.eigenvalues()[i] * t);
  }
  const Eigen::MatrixXcd v = es.eigenvectors().cast<cplx>();
  return v * phases.asDiagonal() * v.adjoint();
}

std::vector<Eigen::MatrixXcd> intermediate_unitaries(const IsingSpec& spec,
                                                     double total_time, int n_v) {
  if (n_v < 1) throw std::invalid_argument("n_v must be >= 1");
  const Eigen::MatrixXcd u = evolution_unitary(spec, total_time / n_v);
  return std::vector<Eigen::MatrixXcd>(static_cast<std::size_t>(n_v), u);
}

int rz_gate_cost(double epsilon, double c0, double c1) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  return static_cast<int>(std::ceil(c0 + c1 * std::log2(1.0 / epsilon)));
}

int default_trotter_steps(const IsingSpec& spec, double total_time, double budget) {
  if (!(budget > 0.0)) throw std::invalid_argument("budget must be positive");
  double sum_abs = 0.0;
  for (int i = 0; i < spec.n_qubits; ++i) {
    for (int j = i + 1; j < spec.n_qubits; ++j) {
      sum_abs += std::abs(spec.couplings(i, j));
    }
  }
  // ZZ terms commute among themselves, so only the field/coupling cross
  // terms contribute to the first-order bound.
  const double bound_at_one = 2.0 * total_time * total_time * spec.field * sum_abs;
  return std::max(1, static_cast<int>(std::ceil(bound_at_one / budget)));
}

std::int64_t estimate_g3_count(const IsingSpec& spec, double total_time,
                               int trotter_steps, double epsilon,
                               double c0, double c1) {
  (void)total_time;  // step count is the caller's choice; see default_trotter_steps
  if (trotter_steps < 1) throw std::invalid_argument("trotter_steps must be >= 1");
  const int rz = rz_gate_cost(epsilon, c0, c1);
  std::int64_t coupled_pairs = 0;
  for (int i = 0; i < spec.n_qubits; ++i) {
    for (int j = i + 1; j < spec.n_qubits; ++j) {
      if (spec.couplings(i, j) != 0.0) ++coupled_pairs;
    }
  }
  const std::int64_t per_step = coupled_pairs * (2 + rz) +
                                static_cast<std::int64_t>(spec.n_qubits) * (2 + rz);
  return static_cast<std::int64_t>(trotter_steps) * per_step;
}

std::string ising_to_text(const IsingSpec& spec) {
  std::ostringstream out;
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  out << "ISING " << spec.n_qubits << ' ' << spec.seed << ' '
      << fmt(spec.coupling_scale) << ' '
      << fmt(spec.coupling_scale > 0.0 ? spec.field / spec.coupling_scale : 0.0)
      << ' ' << fmt(spec.time) << '\n';
  for (int i = 0; i < spec.n_qubits; ++i) {
    for (int j = 0; j < spec.n_qubits; ++j) {
      if (j) out << ' ';
      out << fmt(spec.couplings(i, j));
    }
    out << '\n';
  }
  return out.str();
}

IsingSpec ising_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  IsingSpec spec;
  double ratio = 0.0;
  if (!(in >> tag >> spec.n_qubits >> spec.seed >> spec.coupling_scale >> ratio >>
        spec.time) ||
      tag != "ISING") {
    throw std::runtime_error("bad Ising header");
  }
  spec.field = ratio * spec.coupling_scale;
  spec.couplings = Eigen::MatrixXd::Zero(spec.n_qubits, spec.n_qubits);
  for (int i = 0; i < spec.n_qubits; ++i) {
    for (int j = 0; j < spec.n_qubits; ++j) {
      if (!(in >> spec.couplings(i, j))) {
        throw std::runtime_error("truncated coupling matrix");
      }
    }
  }
  return spec;
}

}  // namespace qrc

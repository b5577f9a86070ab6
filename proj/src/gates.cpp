#include "qrc/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qrc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Gate child streams are indexed 0..n_gates-1; these reserved stream ids
// stay clear of that range.
constexpr std::uint64_t kSubsetOrderStream = std::uint64_t{1} << 40;
constexpr std::uint64_t kPauliProbeStream = (std::uint64_t{1} << 40) + 1;

const GateKind kGenerators[3][3] = {
    {GateKind::CNOT, GateKind::H, GateKind::X},
    {GateKind::CNOT, GateKind::H, GateKind::S},
    {GateKind::CNOT, GateKind::H, GateKind::T},
};

Eigen::Matrix2cd one_qubit_matrix(GateKind kind) {
  Eigen::Matrix2cd m;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case GateKind::H:
      m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
      return m;
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::S:
      m << 1, 0, 0, cplx{0, 1};
      return m;
    case GateKind::T:
      m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4.0);
      return m;
    default:
      throw std::logic_error("not a one-qubit gate");
  }
}

void check_targets(const Gate& gate, int n_qubits) {
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    const int q = gate.qubits[i];
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("gate target " + std::to_string(q) +
                                  " out of range for " + std::to_string(n_qubits) +
                                  " qubits");
    }
    for (std::size_t j = i + 1; j < gate.qubits.size(); ++j) {
      if (gate.qubits[j] == q) {
        throw std::invalid_argument("gate targets are not distinct");
      }
    }
  }
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::CNOT: return "CNOT";
    case GateKind::Matchgate: return "MATCHGATE";
    case GateKind::Diagonal: return "DIAGONAL";
  }
  throw std::logic_error("unknown gate kind");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::MG: return "MG";
    case Family::D2: return "D2";
    case Family::D3: return "D3";
    case Family::DN: return "DN";
  }
  throw std::logic_error("unknown family");
}

Family family_from_string(const std::string& name) {
  if (name == "G1") return Family::G1;
  if (name == "G2") return Family::G2;
  if (name == "G3") return Family::G3;
  if (name == "MG") return Family::MG;
  if (name == "D2") return Family::D2;
  if (name == "D3") return Family::D3;
  if (name == "DN") return Family::DN;
  throw std::invalid_argument("unknown circuit family '" + name + "'");
}

Eigen::Matrix2cd haar_u2(Rng& rng) {
  double x0, x1, x2, x3, norm2;
  do {
    x0 = rng.normal();
    x1 = rng.normal();
    x2 = rng.normal();
    x3 = rng.normal();
    norm2 = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  x0 *= inv;
  x1 *= inv;
  x2 *= inv;
  x3 *= inv;
  Eigen::Matrix2cd u;
  u << cplx{x0, x1}, cplx{x2, x3}, cplx{-x2, x3}, cplx{x0, -x1};
  return std::polar(1.0, rng.uniform(0.0, kTwoPi)) * u;
}

Gate make_matchgate(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b,
                    int q1, int q2) {
  if (q1 == q2) throw std::invalid_argument("matchgate targets must differ");
  const double ua = (a * a.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  const double ub = (b * b.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (ua > 1e-10 || ub > 1e-10) {
    throw std::invalid_argument("matchgate blocks must be unitary");
  }
  if (std::abs(a.determinant() - b.determinant()) > 1e-10) {
    throw std::invalid_argument("matchgate blocks must have equal determinants");
  }
  Gate g;
  g.kind = GateKind::Matchgate;
  g.qubits = {std::min(q1, q2), std::max(q1, q2)};
  g.a = a;
  g.b = b;
  return g;
}

Eigen::Matrix4cd matchgate_matrix(const Gate& gate) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = gate.a(0, 0);
  m(0, 3) = gate.a(0, 1);
  m(3, 0) = gate.a(1, 0);
  m(3, 3) = gate.a(1, 1);
  m(1, 1) = gate.b(0, 0);
  m(1, 2) = gate.b(0, 1);
  m(2, 1) = gate.b(1, 0);
  m(2, 2) = gate.b(1, 1);
  return m;
}

Circuit sample_circuit(Family family, int n_qubits, int n_gates,
                       std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(n_qubits));
  }
  Circuit c;
  c.n_qubits = n_qubits;
  c.family = family;
  c.seed = seed;

  switch (family) {
    case Family::G1:
    case Family::G2:
    case Family::G3: {
      if (n_gates < 0) throw std::invalid_argument("negative gate count");
      if (n_qubits < 2 && n_gates > 0) {
        throw std::invalid_argument(to_string(family) + " needs at least 2 qubits");
      }
      const GateKind* kinds = kGenerators[static_cast<int>(family)];
      c.gates.reserve(static_cast<std::size_t>(n_gates));
      for (int i = 0; i < n_gates; ++i) {
        Rng g(derive_seed(seed, static_cast<std::uint64_t>(i)));
        Gate gate;
        gate.kind = kinds[g.below(3)];
        if (gate.kind == GateKind::CNOT) {
          const int control = static_cast<int>(g.below(static_cast<std::uint64_t>(n_qubits)));
          int target = static_cast<int>(g.below(static_cast<std::uint64_t>(n_qubits - 1)));
          if (target >= control) ++target;
          gate.qubits = {control, target};
        } else {
          gate.qubits = {static_cast<int>(g.below(static_cast<std::uint64_t>(n_qubits)))};
        }
        c.gates.push_back(std::move(gate));
      }
      break;
    }
    case Family::MG: {
      if (n_gates < 0) throw std::invalid_argument("negative gate count");
      if (n_qubits < 2 && n_gates > 0) {
        throw std::invalid_argument("MG needs at least 2 qubits");
      }
      c.gates.reserve(static_cast<std::size_t>(n_gates));
      for (int i = 0; i < n_gates; ++i) {
        Rng g(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const int q1 = static_cast<int>(g.below(static_cast<std::uint64_t>(n_qubits)));
        int q2 = static_cast<int>(g.below(static_cast<std::uint64_t>(n_qubits - 1)));
        if (q2 >= q1) ++q2;
        const Eigen::Matrix2cd a = haar_u2(g);
        Eigen::Matrix2cd b = haar_u2(g);
        // Align det(b) with det(a) by a half-phase on b; the Haar marginal
        // of b survives up to that phase.
        const double delta = std::arg(a.determinant()) - std::arg(b.determinant());
        b *= std::polar(1.0, delta / 2.0);
        c.gates.push_back(make_matchgate(a, b, q1, q2));
      }
      break;
    }
    case Family::D2:
    case Family::D3:
    case Family::DN: {
      const int k = family == Family::D2 ? 2 : family == Family::D3 ? 3 : n_qubits;
      if (n_qubits < k) {
        throw std::invalid_argument(to_string(family) + " needs at least " +
                                    std::to_string(k) + " qubits");
      }
      const auto subsets = k_subsets(n_qubits, k);
      std::vector<Gate> diag_gates;
      diag_gates.reserve(subsets.size());
      // Phases keyed to the subset's lexicographic rank, ordering drawn from
      // a reserved stream, so the two choices are independent.
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        Rng g(derive_seed(seed, static_cast<std::uint64_t>(s)));
        Gate gate;
        gate.kind = GateKind::Diagonal;
        gate.qubits = subsets[s];
        gate.phases.resize(std::size_t{1} << k);
        for (auto& phi : gate.phases) phi = g.uniform(0.0, kTwoPi);
        diag_gates.push_back(std::move(gate));
      }
      std::vector<std::size_t> order(diag_gates.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      Rng shuffler(derive_seed(seed, kSubsetOrderStream));
      shuffle(order.begin(), order.end(), shuffler);

      for (int q = 0; q < n_qubits; ++q) c.gates.push_back({GateKind::H, {q}, {}, {}, {}});
      for (std::size_t i : order) c.gates.push_back(std::move(diag_gates[i]));
      for (int q = 0; q < n_qubits; ++q) c.gates.push_back({GateKind::H, {q}, {}, {}, {}});
      break;
    }
  }
  return c;
}

void validate_circuit(const Circuit& circuit) {
  const int n = circuit.n_qubits;
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("bad qubit count");

  auto kind_allowed = [&](GateKind kind) {
    switch (circuit.family) {
      case Family::G1:
        return kind == GateKind::CNOT || kind == GateKind::H || kind == GateKind::X;
      case Family::G2:
        return kind == GateKind::CNOT || kind == GateKind::H || kind == GateKind::S;
      case Family::G3:
        return kind == GateKind::CNOT || kind == GateKind::H || kind == GateKind::T;
      case Family::MG:
        return kind == GateKind::Matchgate;
      case Family::D2:
      case Family::D3:
      case Family::DN:
        return kind == GateKind::Diagonal || kind == GateKind::H;
    }
    return false;
  };

  for (const Gate& gate : circuit.gates) {
    if (!kind_allowed(gate.kind)) {
      throw std::invalid_argument("gate " + to_string(gate.kind) +
                                  " not permitted in family " + to_string(circuit.family));
    }
    check_targets(gate, n);
    if (gate.kind == GateKind::Matchgate) {
      if (std::abs(gate.a.determinant() - gate.b.determinant()) > 1e-10) {
        throw std::invalid_argument("matchgate determinant mismatch");
      }
    }
    if (gate.kind == GateKind::Diagonal) {
      if (gate.phases.size() != (std::size_t{1} << gate.qubits.size())) {
        throw std::invalid_argument("diagonal gate phase count mismatch");
      }
      for (double phi : gate.phases) {
        if (!(phi >= 0.0 && phi < kTwoPi)) {
          throw std::invalid_argument("diagonal phase outside [0, 2pi)");
        }
      }
    }
  }

  if (circuit.family == Family::D2 || circuit.family == Family::D3 ||
      circuit.family == Family::DN) {
    const int k = circuit.family == Family::D2 ? 2 : circuit.family == Family::D3 ? 3 : n;
    std::size_t expected = 1;
    for (int i = 0; i < k; ++i) expected = expected * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    const std::size_t total = circuit.gates.size();
    if (total != expected + 2 * static_cast<std::size_t>(n)) {
      throw std::invalid_argument("diagonal family gate count mismatch");
    }
    for (std::size_t i = 0; i < total; ++i) {
      const bool in_h_layer = i < static_cast<std::size_t>(n) ||
                              i >= total - static_cast<std::size_t>(n);
      const bool is_h = circuit.gates[i].kind == GateKind::H;
      if (in_h_layer != is_h) {
        throw std::invalid_argument("Hadamards must form the leading and trailing layers");
      }
    }
  }
}

void apply_gate_left(Eigen::MatrixXcd& m, int n_qubits, const Gate& gate) {
  check_targets(gate, n_qubits);
  const Eigen::Index dim = m.rows();
  switch (gate.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::S:
    case GateKind::T: {
      const Eigen::Matrix2cd u = one_qubit_matrix(gate.kind);
      const std::size_t mask = qubit_mask(n_qubits, gate.qubits[0]);
      for (Eigen::Index col = 0; col < m.cols(); ++col) {
        for (std::size_t r = 0; r < static_cast<std::size_t>(dim); ++r) {
          if (r & mask) continue;
          const cplx v0 = m(static_cast<Eigen::Index>(r), col);
          const cplx v1 = m(static_cast<Eigen::Index>(r | mask), col);
          m(static_cast<Eigen::Index>(r), col) = u(0, 0) * v0 + u(0, 1) * v1;
          m(static_cast<Eigen::Index>(r | mask), col) = u(1, 0) * v0 + u(1, 1) * v1;
        }
      }
      break;
    }
    case GateKind::CNOT: {
      const std::size_t cmask = qubit_mask(n_qubits, gate.qubits[0]);
      const std::size_t tmask = qubit_mask(n_qubits, gate.qubits[1]);
      for (Eigen::Index col = 0; col < m.cols(); ++col) {
        for (std::size_t r = 0; r < static_cast<std::size_t>(dim); ++r) {
          if ((r & cmask) && !(r & tmask)) {
            std::swap(m(static_cast<Eigen::Index>(r), col),
                      m(static_cast<Eigen::Index>(r | tmask), col));
          }
        }
      }
      break;
    }
    case GateKind::Matchgate: {
      const std::size_t m1 = qubit_mask(n_qubits, gate.qubits[0]);
      const std::size_t m2 = qubit_mask(n_qubits, gate.qubits[1]);
      for (Eigen::Index col = 0; col < m.cols(); ++col) {
        for (std::size_t r = 0; r < static_cast<std::size_t>(dim); ++r) {
          if (r & (m1 | m2)) continue;
          const auto i00 = static_cast<Eigen::Index>(r);
          const auto i01 = static_cast<Eigen::Index>(r | m2);
          const auto i10 = static_cast<Eigen::Index>(r | m1);
          const auto i11 = static_cast<Eigen::Index>(r | m1 | m2);
          const cplx v00 = m(i00, col), v01 = m(i01, col);
          const cplx v10 = m(i10, col), v11 = m(i11, col);
          m(i00, col) = gate.a(0, 0) * v00 + gate.a(0, 1) * v11;
          m(i11, col) = gate.a(1, 0) * v00 + gate.a(1, 1) * v11;
          m(i01, col) = gate.b(0, 0) * v01 + gate.b(0, 1) * v10;
          m(i10, col) = gate.b(1, 0) * v01 + gate.b(1, 1) * v10;
        }
      }
      break;
    }
    case GateKind::Diagonal: {
      const int k = static_cast<int>(gate.qubits.size());
      if (gate.phases.size() != (std::size_t{1} << k)) {
        throw std::invalid_argument("diagonal gate phase count mismatch");
      }
      std::vector<cplx> factors(static_cast<std::size_t>(dim));
      for (std::size_t r = 0; r < static_cast<std::size_t>(dim); ++r) {
        std::size_t sub = 0;
        for (int i = 0; i < k; ++i) {
          sub = (sub << 1) |
                static_cast<std::size_t>(qubit_bit(r, n_qubits, gate.qubits[static_cast<std::size_t>(i)]));
        }
        factors[r] = std::polar(1.0, gate.phases[sub]);
      }
      for (Eigen::Index col = 0; col < m.cols(); ++col) {
        for (Eigen::Index r = 0; r < dim; ++r) m(r, col) *= factors[static_cast<std::size_t>(r)];
      }
      break;
    }
  }
}

Eigen::MatrixXcd compile(const Circuit& circuit) {
  const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& gate : circuit.gates) apply_gate_left(u, circuit.n_qubits, gate);
  return u;
}

std::vector<Circuit> segment(const Circuit& circuit, int n_segments) {
  if (n_segments < 1) {
    throw std::invalid_argument("segment count must be >= 1, got " +
                                std::to_string(n_segments));
  }
  const std::size_t total = circuit.gates.size();
  const std::size_t base = total / static_cast<std::size_t>(n_segments);
  const std::size_t extra = total % static_cast<std::size_t>(n_segments);
  std::vector<Circuit> out;
  out.reserve(static_cast<std::size_t>(n_segments));
  std::size_t pos = 0;
  for (int s = 0; s < n_segments; ++s) {
    const std::size_t len = base + (static_cast<std::size_t>(s) < extra ? 1 : 0);
    Circuit part;
    part.n_qubits = circuit.n_qubits;
    part.family = circuit.family;
    part.seed = circuit.seed;
    part.gates.assign(circuit.gates.begin() + static_cast<std::ptrdiff_t>(pos),
                      circuit.gates.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
    out.push_back(std::move(part));
  }
  return out;
}

bool is_pauli_conjugation_closed(const Circuit& circuit, int trials) {
  const int n = circuit.n_qubits;
  if (n > 4) {
    throw std::length_error("dense Pauli-basis check supports at most 4 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::MatrixXcd u = compile(circuit);

  Eigen::Matrix2cd pauli[4];
  pauli[0] = Eigen::Matrix2cd::Identity();
  pauli[1] << 0, 1, 1, 0;
  pauli[2] << 0, cplx{0, -1}, cplx{0, 1}, 0;
  pauli[3] << 1, 0, 0, -1;

  const std::size_t n_strings = std::size_t{1} << (2 * n);
  Rng probe(derive_seed(circuit.seed, kPauliProbeStream));

  for (int t = 0; t < trials; ++t) {
    std::vector<int> ops(static_cast<std::size_t>(n));
    bool identity = true;
    do {
      identity = true;
      for (auto& o : ops) {
        o = static_cast<int>(probe.below(4));
        if (o != 0) identity = false;
      }
    } while (identity);

    Eigen::MatrixXcd p = Eigen::MatrixXcd::Ones(1, 1);
    for (int q = 0; q < n; ++q) {
      Eigen::MatrixXcd next(p.rows() * 2, p.cols() * 2);
      for (Eigen::Index i = 0; i < p.rows(); ++i) {
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
          next.block(i * 2, j * 2, 2, 2) = p(i, j) * pauli[ops[static_cast<std::size_t>(q)]];
        }
      }
      p = std::move(next);
    }
    const Eigen::MatrixXcd conj = u * p * u.adjoint();

    // Expand in the Pauli basis: coeff(Q) = Tr[Q conj] / 2^n, evaluated via
    // the flip/sign action of Q on basis states.
    int near_one = 0;
    bool rest_small = true;
    for (std::size_t code = 0; code < n_strings; ++code) {
      std::size_t flip = 0, sign = 0;
      int n_y = 0;
      for (int q = 0; q < n; ++q) {
        const int o = static_cast<int>((code >> (2 * q)) & 3u);
        if (o == 1 || o == 2) flip |= qubit_mask(n, q);
        if (o == 2 || o == 3) sign |= qubit_mask(n, q);
        if (o == 2) ++n_y;
      }
      cplx tr = 0.0;
      for (std::size_t y = 0; y < static_cast<std::size_t>(dim); ++y) {
        const double s = std::popcount(y & sign) % 2 ? -1.0 : 1.0;
        tr += s * conj(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(y ^ flip));
      }
      static const cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const cplx coeff = i_pow[n_y % 4] * tr / static_cast<double>(dim);
      const double mag = std::abs(coeff);
      if (std::abs(mag - 1.0) <= 1e-8) {
        ++near_one;
      } else if (mag >= 1e-8) {
        rest_small = false;
        break;
      }
    }
    if (near_one != 1 || !rest_small) return false;
  }
  return true;
}

std::string circuit_to_text(const Circuit& circuit) {
  std::ostringstream out;
  out << to_string(circuit.family) << ' ' << circuit.n_qubits << ' '
      << circuit.seed << '\n';
  for (const Gate& gate : circuit.gates) {
    out << to_string(gate.kind) << ' ';
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
      if (i) out << ',';
      out << gate.qubits[i];
    }
    if (gate.kind == GateKind::Matchgate) {
      out << ' ';
      bool first = true;
      for (const auto* block : {&gate.a, &gate.b}) {
        for (Eigen::Index r = 0; r < 2; ++r) {
          for (Eigen::Index c = 0; c < 2; ++c) {
            if (!first) out << ',';
            first = false;
            out << fmt_real((*block)(r, c).real()) << ','
                << fmt_real((*block)(r, c).imag());
          }
        }
      }
    } else if (gate.kind == GateKind::Diagonal) {
      out << ' ';
      for (std::size_t i = 0; i < gate.phases.size(); ++i) {
        if (i) out << ',';
        out << fmt_real(gate.phases[i]);
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<double> parse_reals(const std::string& field) {
  std::vector<double> vals;
  std::size_t pos = 0;
  while (pos < field.size()) {
    std::size_t next = field.find(',', pos);
    if (next == std::string::npos) next = field.size();
    vals.push_back(std::stod(field.substr(pos, next - pos)));
    pos = next + 1;
  }
  return vals;
}

GateKind kind_from_string(const std::string& name) {
  if (name == "H") return GateKind::H;
  if (name == "X") return GateKind::X;
  if (name == "S") return GateKind::S;
  if (name == "T") return GateKind::T;
  if (name == "CNOT") return GateKind::CNOT;
  if (name == "MATCHGATE") return GateKind::Matchgate;
  if (name == "DIAGONAL") return GateKind::Diagonal;
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

}  // namespace

Circuit circuit_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty circuit text");
  std::istringstream hs(header);
  std::string fam;
  Circuit c;
  if (!(hs >> fam >> c.n_qubits >> c.seed)) {
    throw std::runtime_error("bad circuit header: '" + header + "'");
  }
  c.family = family_from_string(fam);

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind_name, qubit_field, param_field;
    ls >> kind_name >> qubit_field;
    ls >> param_field;
    Gate gate;
    gate.kind = kind_from_string(kind_name);
    for (double q : parse_reals(qubit_field)) gate.qubits.push_back(static_cast<int>(q));
    if (gate.kind == GateKind::Matchgate) {
      const auto vals = parse_reals(param_field);
      if (vals.size() != 16) throw std::runtime_error("matchgate needs 16 parameters");
      std::size_t i = 0;
      for (auto* block : {&gate.a, &gate.b}) {
        for (Eigen::Index r = 0; r < 2; ++r) {
          for (Eigen::Index col = 0; col < 2; ++col) {
            (*block)(r, col) = cplx{vals[i], vals[i + 1]};
            i += 2;
          }
        }
      }
    } else if (gate.kind == GateKind::Diagonal) {
      gate.phases = parse_reals(param_field);
    }
    c.gates.push_back(std::move(gate));
  }
  return c;
}

}  // namespace qrc

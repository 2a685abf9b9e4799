// Copyright 2026 The zzgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zzgate/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zzgate/errors.hpp"
#include "zzgate/gate_compiler.hpp"

namespace zzgate {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr unsigned kMaxStateQubits = 26;

std::size_t dim_of(unsigned n) { return std::size_t{1} << n; }

std::size_t bit_of(unsigned n, unsigned qubit) {
  return std::size_t{1} << (n - 1 - qubit);
}

// Applies g to every column of `m` (a 2^n x k block of state vectors).
bool is_diagonal(const Gate &g) {
  return g.kind() != GateKind::RX && g.kind() != GateKind::RY;
}

// Adds the gate's phase theta_x to every basis state, U = diag(e^{-i theta}).
void accumulate_phases(const Gate &g, unsigned n, std::vector<double> &theta) {
  const double h = g.angle() / 2;
  switch (g.kind()) {
    case GateKind::GPhase:
      for (double &t : theta) t += g.angle();
      return;
    case GateKind::RZ: {
      const std::size_t b = bit_of(n, g.qubit());
      for (std::size_t x = 0; x < theta.size(); ++x) theta[x] += (x & b) ? -h : h;
      return;
    }
    case GateKind::ZZ: {
      const std::size_t b1 = bit_of(n, g.qubit());
      const std::size_t b2 = bit_of(n, g.second());
      for (std::size_t x = 0; x < theta.size(); ++x) {
        theta[x] += (((x & b1) != 0) != ((x & b2) != 0)) ? -h : h;
      }
      return;
    }
    default:
      throw std::logic_error("not a diagonal gate");
  }
}

inline void scale(double *p, const double *d) {
  const double re = p[0], im = p[1];
  p[0] = re * d[0] - im * d[1];
  p[1] = re * d[1] + im * d[0];
}

// General 2x2 update on the (bit clear, bit set) amplitude pairs of a buffer.
void apply_u2(double *v, std::size_t total, std::size_t b, const Eigen::Matrix2cd &u) {
  const double ar = u(0, 0).real(), ai = u(0, 0).imag(), br = u(0, 1).real(),
               bi = u(0, 1).imag(), cr = u(1, 0).real(), ci = u(1, 0).imag(),
               dr = u(1, 1).real(), di = u(1, 1).imag();
  for (std::size_t base = 0; base < total; base += 2 * b) {
    double *p0 = v + 2 * base;
    double *p1 = p0 + 2 * b;
    for (std::size_t off = 0; off < 2 * b; off += 2) {
      const double r0 = p0[off], i0 = p0[off + 1], r1 = p1[off], i1 = p1[off + 1];
      p0[off] = ar * r0 - ai * i0 + br * r1 - bi * i1;
      p0[off + 1] = ar * i0 + ai * r0 + br * i1 + bi * r1;
      p1[off] = cr * r0 - ci * i0 + dr * r1 - di * i1;
      p1[off + 1] = cr * i0 + ci * r0 + dr * i1 + di * r1;
    }
  }
}

// Either a one-qubit unitary on a bit or, when diagonal is non-empty, a fused
// diagonal factor.
struct Op {
  std::size_t bit = 0;
  Eigen::Matrix2cd u;
  Eigen::VectorXcd diagonal;
};

// Applies one op to every column of a column-major buffer, in real arithmetic.
void apply_op(const Op &op, std::size_t dim, Complex *data, Eigen::Index cols) {
  auto *v = reinterpret_cast<double *>(data);
  const std::size_t total = dim * static_cast<std::size_t>(cols);
  if (op.diagonal.size()) {
    const auto *d = reinterpret_cast<const double *>(op.diagonal.data());
    for (std::size_t col = 0; col < total; col += dim) {
      double *w = v + 2 * col;
      for (std::size_t x = 0; x < dim; ++x) scale(w + 2 * x, d + 2 * x);
    }
    return;
  }
  apply_u2(v, total, op.bit, op.u);
}

Eigen::Matrix2cd rotation_matrix(const Gate &g) {
  const double c = std::cos(g.angle() / 2);
  const double sn = std::sin(g.angle() / 2);
  Eigen::Matrix2cd u;
  if (g.kind() == GateKind::RX) {
    u << c, Complex(0, -sn), Complex(0, -sn), c;
  } else {
    u << c, -sn, sn, c;
  }
  return u;
}

bool independent_of(const std::vector<double> &theta, std::size_t bit) {
  for (std::size_t x = 0; x < theta.size(); ++x) {
    if ((x & bit) == 0 && theta[x] != theta[x | bit]) return false;
  }
  return true;
}

// Diagonal runs are fused into one phase vector. Rotations on one qubit are
// multiplied together while the pending phases commute with them, and a product
// that comes out diagonal is folded back into the phases.
std::vector<Op> lower(const GateSequence &seq) {
  constexpr double kOffDiagonal = 1e-15;
  const unsigned n = seq.n_qubits();
  const std::size_t dim = dim_of(n);
  std::vector<Op> ops;
  std::vector<double> theta(dim, 0.0);
  bool pending = false;
  auto flush = [&] {
    if (!pending) return;
    Op op;
    op.diagonal.resize(static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
      op.diagonal[static_cast<Eigen::Index>(x)] = std::polar(1.0, -theta[x]);
    }
    ops.push_back(std::move(op));
    std::fill(theta.begin(), theta.end(), 0.0);
    pending = false;
  };
  auto settle = [&] {
    if (ops.empty() || ops.back().diagonal.size()) return;
    const Eigen::Matrix2cd &u = ops.back().u;
    if (std::abs(u(0, 1)) > kOffDiagonal || std::abs(u(1, 0)) > kOffDiagonal) return;
    const std::size_t bit = ops.back().bit;
    const double p0 = -std::arg(u(0, 0)), p1 = -std::arg(u(1, 1));
    for (std::size_t x = 0; x < dim; ++x) theta[x] += (x & bit) ? p1 : p0;
    pending = true;
    ops.pop_back();
  };
  for (const Gate &g : seq) {
    if (is_diagonal(g)) {
      accumulate_phases(g, n, theta);
      pending = true;
      continue;
    }
    const std::size_t bit = bit_of(n, g.qubit());
    const Eigen::Matrix2cd r = rotation_matrix(g);
    settle();
    if (!ops.empty() && !ops.back().diagonal.size() && ops.back().bit == bit &&
        (!pending || independent_of(theta, bit))) {
      ops.back().u = r * ops.back().u;
      continue;
    }
    flush();
    ops.push_back(Op{bit, r, {}});
  }
  settle();
  flush();
  return ops;
}

// Runs the ops over blocks of columns small enough to stay in cache.
void run_ops(const std::vector<Op> &ops, unsigned n, Complex *data, Eigen::Index cols) {
  const std::size_t dim = dim_of(n);
  const auto block = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(4096 / dim));
  for (Eigen::Index c0 = 0; c0 < cols; c0 += block) {
    const Eigen::Index width = std::min(block, cols - c0);
    for (const Op &op : ops) {
      apply_op(op, dim, data + c0 * static_cast<Eigen::Index>(dim), width);
    }
  }
}

void check_gate(const Gate &g, unsigned n) {
  if (g.max_qubit() >= static_cast<int>(n)) {
    throw std::out_of_range(
        "gate touches qubit " + std::to_string(g.max_qubit()) + " of a " +
        std::to_string(n) + "-qubit state");
  }
}

}  // namespace

StateVector::StateVector(unsigned n_qubits)
    : n_qubits_(n_qubits), amplitudes_(Eigen::VectorXcd::Zero(
                               static_cast<Eigen::Index>(dim_of(n_qubits)))) {
  if (n_qubits == 0 || n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("state vector qubit count out of range");
  }
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(unsigned n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits == 0 || n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("state vector qubit count out of range");
  }
  if (static_cast<std::size_t>(amplitudes_.size()) != dim_of(n_qubits)) {
    throw DimensionMismatch("amplitude count does not match qubit count");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("state vector must be normalised");
  }
}

StateVector StateVector::basis_state(unsigned n_qubits, std::size_t index) {
  StateVector psi(n_qubits);
  if (index >= dim_of(n_qubits)) {
    throw std::out_of_range("basis index out of range");
  }
  psi.amplitudes_[0] = 0.0;
  psi.amplitudes_[static_cast<Eigen::Index>(index)] = 1.0;
  return psi;
}

void StateVector::apply(const Gate &g) {
  check_gate(g, n_qubits_);
  GateSequence one(n_qubits_);
  one.push_back(g);
  run_ops(lower(one), n_qubits_, amplitudes_.data(), 1);
}

void StateVector::apply(const GateSequence &seq) {
  if (seq.n_qubits() != n_qubits_) {
    throw DimensionMismatch("sequence and state widths differ");
  }
  run_ops(lower(seq), n_qubits_, amplitudes_.data(), 1);
}

DenseUnitary::DenseUnitary(unsigned n_qubits)
    : n_qubits_(n_qubits),
      matrix_(Eigen::MatrixXcd::Identity(
          static_cast<Eigen::Index>(dim_of(n_qubits)),
          static_cast<Eigen::Index>(dim_of(n_qubits)))) {}

DenseUnitary::DenseUnitary(unsigned n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionMismatch("matrix shape does not match qubit count");
  }
}

double DenseUnitary::unitarity_error() const {
  const Eigen::MatrixXcd e =
      matrix_.adjoint() * matrix_ -
      Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols());
  return e.cwiseAbs().maxCoeff();
}

Eigen::Matrix2cd one_qubit_matrix(const Gate &g) {
  const double c = std::cos(g.angle() / 2);
  const double s = std::sin(g.angle() / 2);
  Eigen::Matrix2cd m;
  switch (g.kind()) {
    case GateKind::RX:
      m << c, -kI * s, -kI * s, c;
      break;
    case GateKind::RY:
      m << c, -s, s, c;
      break;
    case GateKind::RZ:
      m << std::exp(-kI * (g.angle() / 2)), 0, 0, std::exp(kI * (g.angle() / 2));
      break;
    default:
      throw std::invalid_argument("not a one-qubit gate");
  }
  return m;
}

StateVector apply_gate(const Gate &g, StateVector psi) {
  psi.apply(g);
  return psi;
}

DenseUnitary sequence_unitary(const GateSequence &seq, unsigned max_qubits) {
  const unsigned n = seq.n_qubits();
  if (n > max_qubits) {
    throw std::invalid_argument(
        "sequence_unitary: " + std::to_string(n) + " qubits exceeds cap of " +
        std::to_string(max_qubits));
  }
  DenseUnitary u(n);
  Eigen::MatrixXcd m = u.matrix();
  // Left-multiplying by each gate is the same as applying it to every
  // column.
  run_ops(lower(seq), n, m.data(), m.cols());
  return DenseUnitary(n, std::move(m));
}

double distance_up_to_phase(const DenseUnitary &u, const DenseUnitary &v) {
  if (u.dimension() != v.dimension()) {
    throw DimensionMismatch("distance between unitaries of different size");
  }
  const Complex overlap = (v.matrix().adjoint() * u.matrix()).trace();
  const double phi = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  return (u.matrix() - std::exp(kI * phi) * v.matrix()).cwiseAbs().maxCoeff();
}

double operator_distance(const DenseUnitary &u, const DenseUnitary &v) {
  if (u.dimension() != v.dimension()) {
    throw DimensionMismatch("distance between unitaries of different size");
  }
  return (u.matrix() - v.matrix()).cwiseAbs().maxCoeff();
}

DenseUnitary diagonal_unitary(const PhaseVector &pv) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(pv.dimension()));
  for (std::size_t x = 0; x < pv.dimension(); ++x) {
    d[static_cast<Eigen::Index>(x)] = std::exp(-kI * pv[x]);
  }
  return DenseUnitary(pv.n_qubits(), d.asDiagonal().toDenseMatrix());
}

DenseUnitary exponential_of_zpoly(const ZPolynomial &zp) {
  return diagonal_unitary(zpoly_to_phases(zp));
}

double simulate_grover(unsigned n_qubits, std::size_t marked, unsigned iterations) {
  if (n_qubits > kDefaultSimulatorCap) {
    throw std::invalid_argument("simulate_grover: too many qubits");
  }
  if (marked >= dim_of(n_qubits)) {
    throw std::out_of_range("marked index out of range");
  }
  StateVector psi(n_qubits);
  psi.apply(build_walsh_hadamard(n_qubits));
  const GateSequence iterate = build_grover_iteration(n_qubits, marked);
  for (unsigned k = 0; k < iterations; ++k) psi.apply(iterate);
  return psi.probability(marked);
}

}  // namespace zzgate

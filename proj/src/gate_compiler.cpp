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

#include "zzgate/gate_compiler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zzgate/errors.hpp"

namespace zzgate {

namespace {

constexpr Complex kI{0.0, 1.0};

// Rotation axes below this norm are treated as a scalar matrix.
constexpr double kScalarTolerance = 1e-13;

std::size_t dim_of(unsigned n) { return std::size_t{1} << n; }

void check_index(unsigned n, std::size_t index) {
  if (index >= dim_of(n)) {
    throw std::out_of_range(
        "basis index " + std::to_string(index) + " out of range for " +
        std::to_string(n) + " qubits");
  }
}

Eigen::Matrix2cd rz_matrix(double a) {
  Eigen::Matrix2cd m;
  m << std::exp(-kI * (a / 2)), 0, 0, std::exp(kI * (a / 2));
  return m;
}

Eigen::Matrix2cd ry_matrix(double b) {
  Eigen::Matrix2cd m;
  m << std::cos(b / 2), -std::sin(b / 2), std::sin(b / 2), std::cos(b / 2);
  return m;
}

}  // namespace

U2Matrix::U2Matrix(const Eigen::Matrix2cd &m, double tolerance) : m_(m) {
  if (!m.allFinite()) throw NotUnitary("non-finite entries");
  const double err =
      (m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (err > tolerance) {
    throw NotUnitary("|U^dagger U - I| = " + std::to_string(err));
  }
}

Eigen::Matrix2cd reconstruct_u2(const U2Params &p) {
  const Eigen::Matrix2cd t = rz_matrix(p.alpha) * ry_matrix(p.beta);
  const Eigen::Matrix2cd core = std::exp(-kI * p.phi0) * rz_matrix(p.phi1);
  return t * core * t.adjoint();
}

U2Params decompose_u2(const U2Matrix &um) {
  const Eigen::Matrix2cd &u = um.matrix();
  U2Params out;
  const double phi0 = -std::arg(u.determinant()) / 2;
  // s = e^{i phi0} u is in SU(2): s = cos(w/2) E - i sin(w/2) n.sigma.
  const Eigen::Matrix2cd s = std::exp(kI * phi0) * u;
  const double c = ((s(0, 0) + s(1, 1)) / 2.0).real();
  const double nx = (kI * (s(0, 1) + s(1, 0)) / 2.0).real();
  const double ny = ((s(1, 0) - s(0, 1)) / 2.0).real();
  const double nz = (kI * (s(0, 0) - s(1, 1)) / 2.0).real();
  const double sn = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (sn < kScalarTolerance) {
    out.phi0 = -std::arg(u(0, 0));
    return out;
  }
  out.phi0 = phi0;
  out.phi1 = 2 * std::atan2(sn, c);
  out.beta = std::acos(std::clamp(nz / sn, -1.0, 1.0));
  if (std::hypot(nx, ny) > kScalarTolerance) out.alpha = std::atan2(ny, nx);
  return out;
}

TruthTable::TruthTable(unsigned n_inputs, std::vector<int> values)
    : n_inputs_(n_inputs), values_(std::move(values)) {
  if (n_inputs == 0 || n_inputs > 30) {
    throw std::invalid_argument("truth table input count out of range");
  }
  if (values_.size() != dim_of(n_inputs)) {
    throw std::invalid_argument(
        "truth table for " + std::to_string(n_inputs) + " inputs needs " +
        std::to_string(dim_of(n_inputs)) + " values");
  }
  for (int v : values_) {
    if (v != 0 && v != 1) {
      throw std::invalid_argument("truth table entries must be 0 or 1");
    }
  }
}

bool TruthTable::is_constant() const {
  return std::all_of(values_.begin(), values_.end(), [&](int v) {
    return v == values_.front();
  });
}

bool TruthTable::is_balanced() const {
  return 2 * static_cast<std::size_t>(
                 std::accumulate(values_.begin(), values_.end(), 0)) ==
         values_.size();
}

DenseUnitary universal_gate_matrix(const U2Matrix &u, unsigned n_qubits) {
  if (n_qubits == 0) throw std::invalid_argument("need at least one qubit");
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  m.bottomRightCorner<2, 2>() = u.matrix();
  return DenseUnitary(n_qubits, std::move(m));
}

GateSequence compile_controlled_u(const U2Matrix &u, unsigned n_qubits) {
  if (n_qubits == 0) throw std::invalid_argument("need at least one qubit");
  const U2Params p = decompose_u2(u);
  const unsigned target = n_qubits - 1;

  // Diagonal core: only the two control-all-ones states carry a phase.
  std::vector<double> theta(dim_of(n_qubits), 0.0);
  theta[dim_of(n_qubits) - 2] = p.phi0 + p.phi1 / 2;
  theta[dim_of(n_qubits) - 1] = p.phi0 - p.phi1 / 2;
  const GateSequence core = compile_diagonal(PhaseVector(n_qubits, theta));

  GateSequence seq(n_qubits);
  // T^dagger, core, T with T = exp(-i alpha I_z) exp(-i beta I_y).
  if (std::abs(p.alpha) >= kDropTolerance) seq.push_back(Gate::rz(target, -p.alpha));
  if (std::abs(p.beta) >= kDropTolerance) seq.push_back(Gate::ry(target, -p.beta));
  seq.append(core);
  if (std::abs(p.beta) >= kDropTolerance) seq.push_back(Gate::ry(target, p.beta));
  if (std::abs(p.alpha) >= kDropTolerance) seq.push_back(Gate::rz(target, p.alpha));
  return seq;
}

GateSequence build_walsh_hadamard(unsigned n_qubits) {
  GateSequence seq(n_qubits);
  seq.push_back(Gate::phase(-static_cast<double>(n_qubits) * kPi / 2));
  for (unsigned k = 0; k < n_qubits; ++k) seq.push_back(Gate::ry(k, kPi / 2));
  for (unsigned k = 0; k < n_qubits; ++k) seq.push_back(Gate::rx(k, kPi));
  return seq;
}

GateSequence compile_conditional_phase(
    unsigned n_qubits, std::size_t marked, double phase) {
  check_index(n_qubits, marked);
  std::vector<double> theta(dim_of(n_qubits), 0.0);
  theta[marked] = phase;
  return compile_diagonal(PhaseVector(n_qubits, std::move(theta)));
}

GateSequence compile_zero_reflection(unsigned n_qubits) {
  std::vector<double> theta(dim_of(n_qubits), kPi);
  theta[0] = 0.0;
  return compile_diagonal(PhaseVector(n_qubits, std::move(theta)));
}

GateSequence build_grover_iteration(unsigned n_qubits, std::size_t marked) {
  check_index(n_qubits, marked);
  const GateSequence w = build_walsh_hadamard(n_qubits);
  GateSequence seq = compile_conditional_phase(n_qubits, marked, kPi);
  seq.append(w);
  seq.append(compile_zero_reflection(n_qubits));
  seq.append(w);
  return seq;
}

GateSequence compile_deutsch_jozsa(const TruthTable &f) {
  std::vector<double> theta(f.values().size());
  std::transform(f.values().begin(), f.values().end(), theta.begin(), [](int v) {
    return v ? kPi : 0.0;
  });
  return compile_diagonal(PhaseVector(f.n_inputs(), std::move(theta)));
}

namespace reference {

DenseUnitary walsh_hadamard(unsigned n_qubits) {
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const int parity = std::popcount(static_cast<std::size_t>(i & j)) & 1;
      m(i, j) = parity ? -scale : scale;
    }
  }
  return DenseUnitary(n_qubits, std::move(m));
}

DenseUnitary conditional_phase(unsigned n_qubits, std::size_t marked, double phase) {
  check_index(n_qubits, marked);
  DenseUnitary id(n_qubits);
  Eigen::MatrixXcd m = id.matrix();
  const auto s = static_cast<Eigen::Index>(marked);
  m(s, s) = std::exp(-kI * phase);
  return DenseUnitary(n_qubits, std::move(m));
}

DenseUnitary grover_iteration(unsigned n_qubits, std::size_t marked) {
  check_index(n_qubits, marked);
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  Eigen::MatrixXcd diffusion =
      Eigen::MatrixXcd::Constant(d, d, 2.0 / static_cast<double>(d)) -
      Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd oracle = Eigen::MatrixXcd::Identity(d, d);
  oracle(static_cast<Eigen::Index>(marked), static_cast<Eigen::Index>(marked)) = -1.0;
  return DenseUnitary(n_qubits, diffusion * oracle);
}

DenseUnitary deutsch_jozsa_oracle(const TruthTable &f) {
  const auto d = static_cast<Eigen::Index>(f.values().size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index x = 0; x < d; ++x) {
    m(x, x) = f.values()[static_cast<std::size_t>(x)] ? -1.0 : 1.0;
  }
  return DenseUnitary(f.n_inputs(), std::move(m));
}

}  // namespace reference

}  // namespace zzgate

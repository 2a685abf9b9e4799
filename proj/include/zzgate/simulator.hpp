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

#pragma once

// Dense state-vector and unitary oracle. Row-major basis index with qubit 0
// as the most significant bit, the same layout as diag_synth.

#include <Eigen/Dense>
#include <cstddef>

#include "zzgate/diag_synth.hpp"
#include "zzgate/gate.hpp"

namespace zzgate {

inline constexpr unsigned kDefaultSimulatorCap = 12;
inline constexpr double kDefaultVerifyTolerance = 1e-10;

class StateVector {
 public:
  /** |0...0>. */
  explicit StateVector(unsigned n_qubits);
  StateVector(unsigned n_qubits, Eigen::VectorXcd amplitudes);

  static StateVector basis_state(unsigned n_qubits, std::size_t index);

  unsigned n_qubits() const { return n_qubits_; }
  const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t x) const { return amplitudes_[x]; }
  double norm() const { return amplitudes_.norm(); }
  double probability(std::size_t x) const { return std::norm(amplitudes_[x]); }

  /** In-place application over amplitude strides. */
  void apply(const Gate &g);
  void apply(const GateSequence &seq);

 private:
  unsigned n_qubits_;
  Eigen::VectorXcd amplitudes_;
};

class DenseUnitary {
 public:
  explicit DenseUnitary(unsigned n_qubits);  // identity
  DenseUnitary(unsigned n_qubits, Eigen::MatrixXcd matrix);

  unsigned n_qubits() const { return n_qubits_; }
  const Eigen::MatrixXcd &matrix() const { return matrix_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

  /** max |(U^dagger U - I)_ij|. */
  double unitarity_error() const;

 private:
  unsigned n_qubits_;
  Eigen::MatrixXcd matrix_;
};

/** The 2x2 matrix of a one-qubit gate. */
Eigen::Matrix2cd one_qubit_matrix(const Gate &g);

StateVector apply_gate(const Gate &g, StateVector psi);

/** Product of gate matrices in application order. Throws
 *  std::invalid_argument above max_qubits. */
DenseUnitary sequence_unitary(
    const GateSequence &seq, unsigned max_qubits = kDefaultSimulatorCap);

/**
 * max_ij |U - e^{i phi} V| with phi = arg tr(V^dagger U); zero iff U and V
 * agree up to a global phase.
 */
double distance_up_to_phase(const DenseUnitary &u, const DenseUnitary &v);

/** max_ij |U - V|, no phase alignment. */
double operator_distance(const DenseUnitary &u, const DenseUnitary &v);

DenseUnitary diagonal_unitary(const PhaseVector &pv);

/** diag(e^{-i theta}) with theta = zpoly_to_phases(zp). */
DenseUnitary exponential_of_zpoly(const ZPolynomial &zp);

/**
 * Start from W|0...0>, apply the compiled Grover iterate `iterations`
 * times and return the probability of the marked basis state.
 */
double simulate_grover(unsigned n_qubits, std::size_t marked, unsigned iterations);

}  // namespace zzgate

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

/**
 * @file
 * Builders for named unitaries, lowered to the RX/RY/RZ/ZZ/PHASE gate set.
 *
 * Multi-controlled u(2): the target-qubit frame change T = RZ(alpha) RY(beta)
 * diagonalises u, so T^dagger C(u) T is a diagonal unitary that differs from
 * identity only on |1...10> and |1...11>. That diagonal core goes through
 * the diag_synth pipeline.
 */

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "zzgate/diag_synth.hpp"
#include "zzgate/gate.hpp"
#include "zzgate/simulator.hpp"

namespace zzgate {

/** A 2x2 unitary; construction checks U^dagger U = I. */
class U2Matrix {
 public:
  explicit U2Matrix(const Eigen::Matrix2cd &m, double tolerance = 1e-12);

  const Eigen::Matrix2cd &matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

 private:
  Eigen::Matrix2cd m_;
};

/**
 * u = T exp(-i(phi0 + phi1 I_z)) T^dagger with
 * T = exp(-i alpha I_z) exp(-i beta I_y).
 */
struct U2Params {
  double alpha = 0.0;
  double beta = 0.0;
  double phi0 = 0.0;
  double phi1 = 0.0;
};

/** Rebuild the matrix from parameters. */
Eigen::Matrix2cd reconstruct_u2(const U2Params &p);

/**
 * Eigen-parameters of u. The rotation axis n = (sin b cos a, sin b sin a,
 * cos b) of the SU(2) part gives the eigenvectors, phi1 in [0, 2pi] is the
 * rotation angle and beta lands in [0, pi]. A scalar u returns
 * alpha = beta = phi1 = 0.
 */
U2Params decompose_u2(const U2Matrix &u);

/** Boolean function on n inputs, values[x] = f(x), qubit 0 is the MSB of
 *  x. */
class TruthTable {
 public:
  TruthTable(unsigned n_inputs, std::vector<int> values);

  unsigned n_inputs() const { return n_inputs_; }
  const std::vector<int> &values() const { return values_; }

  bool is_constant() const;
  bool is_balanced() const;

 private:
  unsigned n_inputs_;
  std::vector<int> values_;
};

/** Identity except the |1...1> control block of the last qubit, which is
 *  u. */
DenseUnitary universal_gate_matrix(const U2Matrix &u, unsigned n_qubits);

GateSequence compile_controlled_u(const U2Matrix &u, unsigned n_qubits);

/** PHASE(-n pi/2), RY(k, pi/2) for all k, then RX(k, pi) for all k:
 *  exactly H^{(x)n}. */
GateSequence build_walsh_hadamard(unsigned n_qubits);

/** diag with e^{-i phase} at `marked` and 1 elsewhere. phase = pi is
 *  Grover's oracle. */
GateSequence compile_conditional_phase(
    unsigned n_qubits, std::size_t marked, double phase);

/** Flips the sign of every basis state except |0...0>. */
GateSequence compile_zero_reflection(unsigned n_qubits);

/** Oracle, then W R W; the compiled R carries its own global phase so the
 *  diffusion is exactly 2|s><s| - E. */
GateSequence build_grover_iteration(unsigned n_qubits, std::size_t marked);

/** diag((-1)^{f(x)}) on the input register. */
GateSequence compile_deutsch_jozsa(const TruthTable &f);

namespace reference {

// Independent dense constructions used as verification targets. None of
// these go through the gate pipeline.

DenseUnitary walsh_hadamard(unsigned n_qubits);
DenseUnitary conditional_phase(unsigned n_qubits, std::size_t marked, double phase);
DenseUnitary grover_iteration(unsigned n_qubits, std::size_t marked);
DenseUnitary deutsch_jozsa_oracle(const TruthTable &f);

}  // namespace reference

}  // namespace zzgate

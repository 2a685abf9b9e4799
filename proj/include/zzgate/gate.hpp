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
 * Target gate set: axis rotations, ZZ diagonal gates and a global phase.
 *
 *   RX(k, t) = exp(-i t I_kx)      RY, RZ likewise
 *   ZZ(k, l, t) = exp(-i t 2 I_kz I_lz)
 *             = diag(e^{-it/2}, e^{it/2}, e^{it/2}, e^{-it/2}) on (k, l)
 *   PHASE(t) = e^{-i t} E
 *
 * Qubits are 0-based in the C++ API and 1-based in the text format.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zzgate/pauli.hpp"

namespace zzgate {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/** Reduce an angle to (-2pi, 2pi]. Every gate has period 4pi in its angle. */
double normalize_angle(double angle);

enum class GateKind { RX, RY, RZ, ZZ, GPhase };

class Gate {
 public:
  static Gate rx(unsigned qubit, double angle);
  static Gate ry(unsigned qubit, double angle);
  static Gate rz(unsigned qubit, double angle);
  static Gate zz(unsigned first, unsigned second, double angle);
  static Gate phase(double angle);

  GateKind kind() const { return kind_; }
  /** Target qubit of a rotation, first qubit of a ZZ. */
  unsigned qubit() const { return qubit_; }
  /** Second qubit of a ZZ. */
  unsigned second() const { return second_; }
  double angle() const { return angle_; }

  bool is_one_qubit() const {
    return kind_ == GateKind::RX || kind_ == GateKind::RY ||
           kind_ == GateKind::RZ;
  }

  /** Highest qubit index touched, -1 for a global phase. */
  int max_qubit() const;

  Gate inverse() const;

  bool operator==(const Gate &) const = default;

 private:
  Gate(GateKind kind, unsigned qubit, unsigned second, double angle)
      : kind_(kind), qubit_(qubit), second_(second), angle_(angle) {}

  GateKind kind_;
  unsigned qubit_;
  unsigned second_;
  double angle_;
};

/** Ordered gates, the first element is applied first. */
class GateSequence {
 public:
  explicit GateSequence(unsigned n_qubits);

  unsigned n_qubits() const { return n_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }
  const Gate &operator[](std::size_t i) const { return gates_[i]; }

  /** Throws std::out_of_range if the gate touches a qubit >= n_qubits. */
  void push_back(const Gate &g);
  void append(const GateSequence &other);

  /** Gates reversed and inverted: the adjoint circuit. */
  GateSequence inverse() const;

  bool operator==(const GateSequence &) const = default;

 private:
  unsigned n_qubits_;
  std::vector<Gate> gates_;
};

struct GateCounts {
  std::size_t zz = 0;
  std::size_t one_qubit = 0;
  std::size_t phase = 0;

  std::size_t total() const { return zz + one_qubit + phase; }
  bool operator==(const GateCounts &) const = default;
};

GateCounts gate_counts(const GateSequence &seq);

/**
 * Text form: a "QUBITS <n>" header then one gate per line,
 * "RX <k> <t>", "RY <k> <t>", "RZ <k> <t>", "ZZ <k> <l> <t>", "PHASE <t>",
 * 1-based qubits, angles with 17 significant digits. Parsing skips blank
 * lines and '#' comments.
 */
std::string to_text(const GateSequence &seq);
GateSequence parse_sequence_text(std::string_view text);

/** The Hermitian generator G with gate = exp(-i angle G); identity for a
 *  global phase. */
ProductOperator gate_generator(const Gate &g, unsigned n_qubits);

/** U op U^dagger where U is the unitary of the sequence. Global phases drop
 *  out. */
PauliPolynomial conjugate_by_sequence(
    const PauliPolynomial &op, const GateSequence &seq);

}  // namespace zzgate

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
 * Exact synthesis of diagonal unitaries.
 *
 * A diagonal unitary U = diag(e^{-i theta_x}) is the exponential of a
 * longitudinal Hamiltonian
 *
 *   H = c E + sum_S a_S 2^{|S|-1} prod_{j in S} I_jz,
 *
 * whose coefficients are the Walsh transform of the phases. All terms of H
 * commute, so exp(-iH) factors into one exponential per term. Singletons
 * become RZ gates, pairs become ZZ gates, and larger Z-strings are peeled
 * down to pairs by conjugating with a ZZ(pi/2)-based Clifford frame change.
 *
 * Basis index x has qubit 0 as the most significant bit; bit value 0 is the
 * m = +1/2 state.
 */

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "zzgate/gate.hpp"

namespace zzgate {

class PhaseVector {
 public:
  PhaseVector(unsigned n_qubits, std::vector<double> phases);

  static PhaseVector zero(unsigned n_qubits);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return phases_.size(); }
  const std::vector<double> &phases() const { return phases_; }
  double operator[](std::size_t x) const { return phases_[x]; }

 private:
  unsigned n_qubits_;
  std::vector<double> phases_;
};

/** Sorted, duplicate-free 0-based qubit indices. */
using QubitSubset = std::vector<unsigned>;

/** Orders subsets by size, then lexicographically. */
struct SubsetOrder {
  bool operator()(const QubitSubset &a, const QubitSubset &b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class ZPolynomial {
 public:
  using TermMap = std::map<QubitSubset, double, SubsetOrder>;

  explicit ZPolynomial(unsigned n_qubits, double constant = 0.0);

  unsigned n_qubits() const { return n_qubits_; }
  double constant() const { return constant_; }
  void set_constant(double c) { constant_ = c; }
  const TermMap &terms() const { return terms_; }

  double coefficient(const QubitSubset &subset) const;

  /** Adds to the coefficient of 2^{|S|-1} prod I_jz; the subset is sorted
   *  and validated, sub-tolerance results are erased. */
  void add(QubitSubset subset, double coefficient);

 private:
  unsigned n_qubits_;
  double constant_;
  TermMap terms_;
};

/** In-place unnormalised Walsh-Hadamard transform, h[m] = sum_x
 *  v[x] (-1)^{popcount(x & m)}. Length must be a power of two. */
void walsh_transform(std::span<double> values);

ZPolynomial phases_to_zpoly(const PhaseVector &pv);

PhaseVector zpoly_to_phases(const ZPolynomial &zp);

/**
 * exp(-i coefficient 2^{m-1} prod_{j in subset} I_jz) for m = |subset| >= 2
 * as ZZ and one-qubit gates: 2m-3 ZZ gates and 6(m-2) rotations.
 */
GateSequence reduce_zstring(
    unsigned n_qubits, const QubitSubset &subset, double coefficient);

/** PHASE, then RZ per singleton, then ZZ per pair, then the reduced strings
 *  of every larger subset, in SubsetOrder. Zero terms emit nothing. */
GateSequence zpoly_to_sequence(const ZPolynomial &zp);

/** phases_to_zpoly followed by zpoly_to_sequence. */
GateSequence compile_diagonal(const PhaseVector &pv);

}  // namespace zzgate

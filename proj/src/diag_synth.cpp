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

#include "zzgate/diag_synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace zzgate {

namespace {

constexpr unsigned kMaxQubits = 30;

// Bit of qubit j in basis index x (qubit 0 is the most significant bit).
inline std::size_t qubit_mask(unsigned n, unsigned j) {
  return std::size_t{1} << (n - 1 - j);
}

}  // namespace

PhaseVector::PhaseVector(unsigned n_qubits, std::vector<double> phases)
    : n_qubits_(n_qubits), phases_(std::move(phases)) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("phase vector qubit count out of range");
  }
  if (phases_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument(
        "phase vector for " + std::to_string(n_qubits) + " qubits needs " +
        std::to_string(std::size_t{1} << n_qubits) + " entries, got " +
        std::to_string(phases_.size()));
  }
  for (double p : phases_) {
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite phase");
  }
}

PhaseVector PhaseVector::zero(unsigned n_qubits) {
  return PhaseVector(n_qubits, std::vector<double>(std::size_t{1} << n_qubits));
}

ZPolynomial::ZPolynomial(unsigned n_qubits, double constant)
    : n_qubits_(n_qubits), constant_(constant) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("z-polynomial qubit count out of range");
  }
}

double ZPolynomial::coefficient(const QubitSubset &subset) const {
  auto it = terms_.find(subset);
  return it == terms_.end() ? 0.0 : it->second;
}

void ZPolynomial::add(QubitSubset subset, double coefficient) {
  std::sort(subset.begin(), subset.end());
  if (subset.empty()) throw std::invalid_argument("empty subset");
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw std::invalid_argument("repeated qubit in subset");
  }
  if (subset.back() >= n_qubits_) {
    throw std::out_of_range("subset qubit out of range");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(subset), coefficient);
  if (!inserted) it->second += coefficient;
  if (std::abs(it->second) < kDropTolerance) terms_.erase(it);
}

void walsh_transform(std::span<double> values) {
  const std::size_t n = values.size();
  if (!std::has_single_bit(n)) {
    throw std::invalid_argument("walsh transform length must be a power of 2");
  }
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = values[j];
        const double b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
    }
  }
}

ZPolynomial phases_to_zpoly(const PhaseVector &pv) {
  const unsigned n = pv.n_qubits();
  std::vector<double> h = pv.phases();
  walsh_transform(h);
  const double scale = std::ldexp(1.0, -static_cast<int>(n));
  ZPolynomial zp(n, h[0] * scale);
  if (std::abs(zp.constant()) < kDropTolerance) zp.set_constant(0.0);
  for (std::size_t mask = 1; mask < h.size(); ++mask) {
    const double a = 2.0 * scale * h[mask];
    if (std::abs(a) < kDropTolerance) continue;
    QubitSubset s;
    for (unsigned j = 0; j < n; ++j) {
      if (mask & qubit_mask(n, j)) s.push_back(j);
    }
    zp.add(std::move(s), a);
  }
  return zp;
}

PhaseVector zpoly_to_phases(const ZPolynomial &zp) {
  const unsigned n = zp.n_qubits();
  // theta_x = c + sum_S (a_S / 2) prod_{j in S} s_j(x): fill the Walsh
  // spectrum and transform back.
  std::vector<double> spectrum(std::size_t{1} << n, 0.0);
  spectrum[0] = zp.constant();
  for (const auto &[subset, a] : zp.terms()) {
    std::size_t mask = 0;
    for (unsigned j : subset) mask |= qubit_mask(n, j);
    spectrum[mask] += 0.5 * a;
  }
  walsh_transform(spectrum);
  return PhaseVector(n, std::move(spectrum));
}

GateSequence reduce_zstring(
    unsigned n_qubits, const QubitSubset &subset, double coefficient) {
  QubitSubset s = subset;
  std::sort(s.begin(), s.end());
  if (s.size() < 2) {
    throw std::invalid_argument("z-string reduction needs at least two qubits");
  }
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("repeated qubit in z-string");
  }
  GateSequence seq(n_qubits);
  if (s.size() == 2) {
    seq.push_back(Gate::zz(s[0], s[1], coefficient));
    return seq;
  }
  // Drop the second-highest qubit q and keep the highest p as pivot:
  //   exp(-i c 2^m ... I_qz I_pz) = V exp(-i c 2^{m-1} ... I_pz) V^dagger,
  //   V = RX_p(pi/2) ZZ_qp(pi/2) RX_p(-pi/2) RY_p(pi/2)   (matrix order).
  // V maps I_pz to 2 I_qz I_pz under conjugation.
  const unsigned p = s[s.size() - 1];
  const unsigned q = s[s.size() - 2];
  const double h = kPi / 2;

  // V^dagger, applied first.
  seq.push_back(Gate::rx(p, -h));
  seq.push_back(Gate::zz(q, p, -h));
  seq.push_back(Gate::rx(p, h));
  seq.push_back(Gate::ry(p, -h));

  QubitSubset inner(s.begin(), s.end() - 2);
  inner.push_back(p);
  seq.append(reduce_zstring(n_qubits, inner, coefficient));

  seq.push_back(Gate::ry(p, h));
  seq.push_back(Gate::rx(p, -h));
  seq.push_back(Gate::zz(q, p, h));
  seq.push_back(Gate::rx(p, h));
  return seq;
}

GateSequence zpoly_to_sequence(const ZPolynomial &zp) {
  const unsigned n = zp.n_qubits();
  GateSequence seq(n);
  if (std::abs(zp.constant()) >= kDropTolerance) {
    seq.push_back(Gate::phase(zp.constant()));
  }
  // The map iterates singletons, then pairs, then larger strings.
  for (const auto &[subset, a] : zp.terms()) {
    if (subset.size() == 1) {
      seq.push_back(Gate::rz(subset[0], a));
    } else {
      seq.append(reduce_zstring(n, subset, a));
    }
  }
  return seq;
}

GateSequence compile_diagonal(const PhaseVector &pv) {
  return zpoly_to_sequence(phases_to_zpoly(pv));
}

}  // namespace zzgate

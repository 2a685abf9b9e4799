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

#include "zzgate/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace zzgate {

namespace {

constexpr Complex kI{0.0, 1.0};

int ladder_order(Ladder l) {
  switch (l) {
    case Ladder::Plus:
      return 1;
    case Ladder::Minus:
      return -1;
    default:
      return 0;
  }
}

}  // namespace

PauliPolynomial from_ladder(const std::vector<Ladder> &factors, Complex coefficient) {
  const auto n = static_cast<unsigned>(factors.size());
  PauliPolynomial out(ProductOperator::identity(n, coefficient));
  for (unsigned k = 0; k < n; ++k) {
    PauliPolynomial factor(n);
    switch (factors[k]) {
      case Ladder::E:
        continue;
      case Ladder::Z:
        factor.add_term(ProductOperator::single(n, k, Pauli::Z));
        break;
      case Ladder::Plus:  // I+ = Ix + i Iy
        factor.add_term(ProductOperator::single(n, k, Pauli::X));
        factor.add_term(ProductOperator::single(n, k, Pauli::Y, kI));
        break;
      case Ladder::Minus:  // I- = Ix - i Iy
        factor.add_term(ProductOperator::single(n, k, Pauli::X));
        factor.add_term(ProductOperator::single(n, k, Pauli::Y, -kI));
        break;
    }
    out = out * factor;
  }
  return out;
}

CoherenceProfile coherence_orders(const PauliPolynomial &op) {
  // Expand every term into ladder strings and accumulate amplitudes per
  // string first: distinct Cartesian terms can cancel in the ladder basis
  // (Ix Ix + Iy Iy has no double-quantum part).
  std::map<std::vector<Ladder>, Complex> expanded;
  for (const auto &[factors, coefficient] : op.terms()) {
    std::vector<std::pair<std::vector<Ladder>, Complex>> partial{
        {{}, coefficient}};
    for (Pauli p : factors) {
      std::vector<std::pair<std::vector<Ladder>, Complex>> next;
      next.reserve(partial.size() * 2);
      for (auto &[prefix, c] : partial) {
        auto push = [&](Ladder l, Complex s) {
          auto v = prefix;
          v.push_back(l);
          next.emplace_back(std::move(v), c * s);
        };
        switch (p) {
          case Pauli::E:
            push(Ladder::E, 1.0);
            break;
          case Pauli::Z:
            push(Ladder::Z, 1.0);
            break;
          case Pauli::X:  // (I+ + I-)/2
            push(Ladder::Plus, 0.5);
            push(Ladder::Minus, 0.5);
            break;
          case Pauli::Y:  // (I+ - I-)/(2i)
            push(Ladder::Plus, -0.5 * kI);
            push(Ladder::Minus, 0.5 * kI);
            break;
        }
      }
      partial = std::move(next);
    }
    for (auto &[key, c] : partial) expanded[key] += c;
  }

  CoherenceProfile profile;
  for (const auto &[key, c] : expanded) {
    if (std::abs(c) < kDropTolerance) continue;
    int p = 0;
    for (Ladder l : key) p += ladder_order(l);
    profile.component_weights[p] += std::norm(c);
  }
  for (const auto &[p, w] : profile.component_weights) profile.orders.insert(p);
  return profile;
}

std::string to_string(Subspace s) {
  switch (s) {
    case Subspace::Longitudinal:
      return "Longitudinal";
    case Subspace::ZeroQuantum:
      return "ZeroQuantum";
    case Subspace::EvenOrder:
      return "EvenOrder";
    case Subspace::General:
      return "General";
  }
  return "General";
}

Subspace classify_subspace(const PauliPolynomial &op) {
  const bool longitudinal =
      std::all_of(op.terms().begin(), op.terms().end(), [](const auto &t) {
        return std::all_of(t.first.begin(), t.first.end(), [](Pauli p) {
          return p == Pauli::E || p == Pauli::Z;
        });
      });
  if (longitudinal) return Subspace::Longitudinal;
  const CoherenceProfile profile = coherence_orders(op);
  if (std::all_of(profile.orders.begin(), profile.orders.end(), [](int p) {
        return p == 0;
      })) {
    return Subspace::ZeroQuantum;
  }
  if (std::all_of(profile.orders.begin(), profile.orders.end(), [](int p) {
        return p % 2 == 0;
      })) {
    return Subspace::EvenOrder;
  }
  return Subspace::General;
}

}  // namespace zzgate

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

// Multiple-quantum coherence order of product-operator sums.
//
// An operator Q_p has coherence order p when [F_z, Q_p] = p Q_p with F_z the
// total z magnetisation. Expanding I_x = (I+ + I-)/2 and
// I_y = (I+ - I-)/(2i) turns any Cartesian operator into a sum of ladder
// strings whose order is (#raising - #lowering).

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zzgate/pauli.hpp"

namespace zzgate {

enum class Ladder : std::uint8_t { E, Z, Plus, Minus };

/** c * prod_k L_k rewritten in the Cartesian basis. */
PauliPolynomial from_ladder(const std::vector<Ladder> &factors, Complex coefficient);

struct CoherenceProfile {
  std::set<int> orders;
  /** p -> sum of |c|^2 over the ladder strings of order p. */
  std::map<int, double> component_weights;
};

CoherenceProfile coherence_orders(const PauliPolynomial &op);

/** Ordered from most to least specific. */
enum class Subspace { Longitudinal, ZeroQuantum, EvenOrder, General };

std::string to_string(Subspace s);

Subspace classify_subspace(const PauliPolynomial &op);

}  // namespace zzgate

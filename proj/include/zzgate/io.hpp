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

// JSON documents for the CLI inputs. Qubit and spin indices are 1-based in
// every file.
//
//   phase vector   {"n": 2, "phases": [0, 0, 0, 3.14159]}
//   z-polynomial   {"n": 2, "constant": 0.78, "terms": [{"qubits": [1, 2], "coeff": 1.57}]}
//   truth table    {"n": 3, "values": [0, 1, 1, 0, 1, 0, 0, 1]}
//   u(2) matrix    {"re": [[0, 1], [1, 0]], "im": [[0, 0], [0, 0]]}
//   coupling graph {"n": 3, "shifts": [100, 200, 300],
//                   "couplings": [{"i": 1, "j": 2, "J": 7.5}]}
//
// Readers throw ParseError for malformed documents, NotUnitary for a
// non-unitary matrix and std::out_of_range for an index outside 1..n.

#include <string>
#include <string_view>

#include "zzgate/diag_synth.hpp"
#include "zzgate/gate_compiler.hpp"
#include "zzgate/pulse.hpp"

namespace zzgate::io {

PhaseVector phase_vector_from_json(std::string_view text);
std::string to_json(const PhaseVector &pv);

ZPolynomial zpoly_from_json(std::string_view text);
std::string to_json(const ZPolynomial &zp);

TruthTable truth_table_from_json(std::string_view text);
std::string to_json(const TruthTable &tt);

U2Matrix u2_from_json(std::string_view text);
std::string to_json(const U2Matrix &u);

CouplingGraph coupling_graph_from_json(std::string_view text);
std::string to_json(const CouplingGraph &g);

/** Whole file as a string; ParseError if unreadable. */
std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace zzgate::io

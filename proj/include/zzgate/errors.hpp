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

#include <stdexcept>
#include <string>

namespace zzgate {

/** Operands act on different numbers of spins/qubits. */
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string &what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

/** A matrix that must be unitary is not. */
class NotUnitary : public std::invalid_argument {
 public:
  explicit NotUnitary(const std::string &what)
      : std::invalid_argument("not unitary: " + what) {}
};

/** Malformed operator strings, gate files and JSON documents. */
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string &what)
      : std::runtime_error("parse error: " + what) {}
};

}  // namespace zzgate

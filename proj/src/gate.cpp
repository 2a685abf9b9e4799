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

#include "zzgate/gate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "zzgate/errors.hpp"

namespace zzgate {

double normalize_angle(double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("gate angle must be finite");
  }
  if (angle > -2 * kPi && angle <= 2 * kPi) return angle;
  double r = std::fmod(angle, 4 * kPi);
  if (r <= -2 * kPi) r += 4 * kPi;
  if (r > 2 * kPi) r -= 4 * kPi;
  return r;
}

Gate Gate::rx(unsigned qubit, double angle) {
  return Gate(GateKind::RX, qubit, 0, normalize_angle(angle));
}

Gate Gate::ry(unsigned qubit, double angle) {
  return Gate(GateKind::RY, qubit, 0, normalize_angle(angle));
}

Gate Gate::rz(unsigned qubit, double angle) {
  return Gate(GateKind::RZ, qubit, 0, normalize_angle(angle));
}

Gate Gate::zz(unsigned first, unsigned second, double angle) {
  if (first == second) {
    throw std::invalid_argument("ZZ gate needs two distinct qubits");
  }
  return Gate(GateKind::ZZ, first, second, normalize_angle(angle));
}

Gate Gate::phase(double angle) {
  return Gate(GateKind::GPhase, 0, 0, normalize_angle(angle));
}

int Gate::max_qubit() const {
  switch (kind_) {
    case GateKind::GPhase:
      return -1;
    case GateKind::ZZ:
      return static_cast<int>(std::max(qubit_, second_));
    default:
      return static_cast<int>(qubit_);
  }
}

Gate Gate::inverse() const {
  return Gate(kind_, qubit_, second_, normalize_angle(-angle_));
}

GateSequence::GateSequence(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw std::invalid_argument("sequence needs a qubit");
}

void GateSequence::push_back(const Gate &g) {
  if (g.max_qubit() >= static_cast<int>(n_qubits_)) {
    throw std::out_of_range(
        "gate touches qubit " + std::to_string(g.max_qubit()) + " of a " +
        std::to_string(n_qubits_) + "-qubit sequence");
  }
  gates_.push_back(g);
}

void GateSequence::append(const GateSequence &other) {
  if (other.n_qubits_ != n_qubits_) {
    throw DimensionMismatch("appending sequences of different width");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

GateSequence GateSequence::inverse() const {
  GateSequence out(n_qubits_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

GateCounts gate_counts(const GateSequence &seq) {
  GateCounts c;
  for (const Gate &g : seq) {
    if (g.kind() == GateKind::ZZ) {
      ++c.zz;
    } else if (g.kind() == GateKind::GPhase) {
      ++c.phase;
    } else {
      ++c.one_qubit;
    }
  }
  return c;
}

namespace {

std::string format_angle(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

unsigned parse_qubit(const std::string &tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
    return static_cast<unsigned>(v - 1);
  } catch (const std::logic_error &) {
    throw ParseError(
        "line " + std::to_string(line_no) + ": bad qubit index '" + tok + "'");
  }
}

double parse_angle(const std::string &tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument(tok);
    return v;
  } catch (const std::logic_error &) {
    throw ParseError(
        "line " + std::to_string(line_no) + ": bad angle '" + tok + "'");
  }
}

}  // namespace

std::string to_text(const GateSequence &seq) {
  std::ostringstream os;
  os << "QUBITS " << seq.n_qubits() << '\n';
  for (const Gate &g : seq) {
    switch (g.kind()) {
      case GateKind::RX:
        os << "RX " << g.qubit() + 1;
        break;
      case GateKind::RY:
        os << "RY " << g.qubit() + 1;
        break;
      case GateKind::RZ:
        os << "RZ " << g.qubit() + 1;
        break;
      case GateKind::ZZ:
        os << "ZZ " << g.qubit() + 1 << ' ' << g.second() + 1;
        break;
      case GateKind::GPhase:
        os << "PHASE";
        break;
    }
    os << ' ' << format_angle(g.angle()) << '\n';
  }
  return os.str();
}

GateSequence parse_sequence_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<GateSequence> seq;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    auto expect = [&](std::size_t n) {
      if (tok.size() != n) {
        throw ParseError(
            "line " + std::to_string(line_no) + ": '" + tok[0] + "' takes " +
            std::to_string(n - 1) + " arguments");
      }
    };
    if (!seq) {
      if (tok[0] != "QUBITS") {
        throw ParseError("sequence must start with a QUBITS header");
      }
      expect(2);
      seq.emplace(parse_qubit(tok[1], line_no) + 1);
      continue;
    }
    try {
      if (tok[0] == "RX" || tok[0] == "RY" || tok[0] == "RZ") {
        expect(3);
        const unsigned q = parse_qubit(tok[1], line_no);
        const double a = parse_angle(tok[2], line_no);
        seq->push_back(
            tok[0] == "RX"   ? Gate::rx(q, a)
            : tok[0] == "RY" ? Gate::ry(q, a)
                             : Gate::rz(q, a));
      } else if (tok[0] == "ZZ") {
        expect(4);
        seq->push_back(Gate::zz(
            parse_qubit(tok[1], line_no), parse_qubit(tok[2], line_no),
            parse_angle(tok[3], line_no)));
      } else if (tok[0] == "PHASE") {
        expect(2);
        seq->push_back(Gate::phase(parse_angle(tok[1], line_no)));
      } else {
        throw ParseError(
            "line " + std::to_string(line_no) + ": unknown gate '" + tok[0] +
            "'");
      }
    } catch (const ParseError &) {
      throw;
    } catch (const std::exception &e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!seq) throw ParseError("sequence must start with a QUBITS header");
  return *seq;
}

ProductOperator gate_generator(const Gate &g, unsigned n_qubits) {
  switch (g.kind()) {
    case GateKind::RX:
      return ProductOperator::single(n_qubits, g.qubit(), Pauli::X);
    case GateKind::RY:
      return ProductOperator::single(n_qubits, g.qubit(), Pauli::Y);
    case GateKind::RZ:
      return ProductOperator::single(n_qubits, g.qubit(), Pauli::Z);
    case GateKind::ZZ:
      return ProductOperator::basis(n_qubits, {g.qubit(), g.second()}, Pauli::Z);
    case GateKind::GPhase:
      break;
  }
  return ProductOperator::identity(n_qubits);
}

PauliPolynomial conjugate_by_sequence(
    const PauliPolynomial &op, const GateSequence &seq) {
  if (op.n_spins() != seq.n_qubits()) {
    throw DimensionMismatch("operator and sequence widths differ");
  }
  PauliPolynomial out = op;
  for (const Gate &g : seq) {
    if (g.kind() == GateKind::GPhase) continue;
    out = conjugate_bch(gate_generator(g, seq.n_qubits()), g.angle(), out);
  }
  return out;
}

}  // namespace zzgate

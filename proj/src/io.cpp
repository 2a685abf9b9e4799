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

#include "zzgate/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "zzgate/errors.hpp"

namespace zzgate::io {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(e.what());
  }
}

// Wraps type errors, missing keys and constructor precondition failures.
template <typename F>
auto convert(const char *what, F &&f) {
  try {
    return f();
  } catch (const ParseError &) {
    throw;
  } catch (const NotUnitary &) {
    throw;
  } catch (const std::out_of_range &) {
    throw;
  } catch (const std::exception &e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

unsigned index_from_json(const json &j, unsigned n) {
  const int v = j.get<int>();
  if (v < 1 || static_cast<unsigned>(v) > n) {
    throw std::out_of_range("index " + std::to_string(v) + " not in 1.." + std::to_string(n));
  }
  return static_cast<unsigned>(v - 1);
}

}  // namespace

PhaseVector phase_vector_from_json(std::string_view text) {
  const json j = parse(text);
  return convert("phase vector", [&] {
    return PhaseVector(j.at("n").get<unsigned>(), j.at("phases").get<std::vector<double>>());
  });
}

std::string to_json(const PhaseVector &pv) {
  return json{{"n", pv.n_qubits()}, {"phases", pv.phases()}}.dump();
}

ZPolynomial zpoly_from_json(std::string_view text) {
  const json j = parse(text);
  return convert("z-polynomial", [&] {
    const auto n = j.at("n").get<unsigned>();
    ZPolynomial zp(n, j.value("constant", 0.0));
    for (const auto &t : j.value("terms", json::array())) {
      QubitSubset s;
      for (const auto &q : t.at("qubits")) s.push_back(index_from_json(q, n));
      zp.add(std::move(s), t.at("coeff").get<double>());
    }
    return zp;
  });
}

std::string to_json(const ZPolynomial &zp) {
  json terms = json::array();
  for (const auto &[subset, a] : zp.terms()) {
    std::vector<unsigned> q;
    for (unsigned s : subset) q.push_back(s + 1);
    terms.push_back({{"qubits", q}, {"coeff", a}});
  }
  return json{{"n", zp.n_qubits()}, {"constant", zp.constant()}, {"terms", terms}}.dump();
}

TruthTable truth_table_from_json(std::string_view text) {
  const json j = parse(text);
  return convert("truth table", [&] {
    return TruthTable(j.at("n").get<unsigned>(), j.at("values").get<std::vector<int>>());
  });
}

std::string to_json(const TruthTable &tt) {
  return json{{"n", tt.n_inputs()}, {"values", tt.values()}}.dump();
}

U2Matrix u2_from_json(std::string_view text) {
  const json j = parse(text);
  return convert("u(2) matrix", [&] {
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const auto im = j.value("im", std::vector<std::vector<double>>{{0, 0}, {0, 0}});
    if (re.size() != 2 || im.size() != 2) throw std::invalid_argument("expected 2x2");
    Eigen::Matrix2cd m;
    for (int r = 0; r < 2; ++r) {
      if (re[r].size() != 2 || im[r].size() != 2) {
        throw std::invalid_argument("expected 2x2");
      }
      for (int c = 0; c < 2; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
    }
    return U2Matrix(m);
  });
}

std::string to_json(const U2Matrix &u) {
  json re = json::array();
  json im = json::array();
  for (int r = 0; r < 2; ++r) {
    re.push_back({u(r, 0).real(), u(r, 1).real()});
    im.push_back({u(r, 0).imag(), u(r, 1).imag()});
  }
  return json{{"re", re}, {"im", im}}.dump();
}

CouplingGraph coupling_graph_from_json(std::string_view text) {
  const json j = parse(text);
  return convert("coupling graph", [&] {
    const auto n = j.at("n").get<unsigned>();
    CouplingGraph g(n, j.value("shifts", std::vector<double>(n, 0.0)));
    for (const auto &c : j.value("couplings", json::array())) {
      const unsigned a = index_from_json(c.at("i"), n);
      const unsigned b = index_from_json(c.at("j"), n);
      const double hz = c.at("J").get<double>();
      if (g.coupled(a, b) && g.coupling(a, b) != hz) {
        throw std::invalid_argument("conflicting couplings for one pair");
      }
      g.set_coupling(a, b, hz);
    }
    return g;
  });
}

std::string to_json(const CouplingGraph &g) {
  json couplings = json::array();
  for (const auto &[key, hz] : g.couplings()) {
    couplings.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"J", hz}});
  }
  return json{{"n", g.n_spins()}, {"shifts", g.shifts()}, {"couplings", couplings}}
      .dump();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace zzgate::io

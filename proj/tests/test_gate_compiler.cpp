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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracle.hpp"
#include "zzgate/errors.hpp"
#include "zzgate/gate_compiler.hpp"

using namespace zzgate;
using Catch::Approx;

namespace {

constexpr Complex kI{0.0, 1.0};

// E + |1..1><1..1| (x) (u - E), assembled with Kronecker products.
Eigen::MatrixXcd block_universal(const Eigen::Matrix2cd &u, unsigned n) {
  const Eigen::Index dc = Eigen::Index{1} << (n - 1);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dc, dc);
  proj(dc - 1, dc - 1) = 1.0;
  Eigen::MatrixXcd delta = u - Eigen::Matrix2cd::Identity();
  return Eigen::MatrixXcd::Identity(2 * dc, 2 * dc) + oracle::kron(proj, delta);
}

}  // namespace

TEST_CASE("U2Matrix rejects non-unitary input") {
  Eigen::Matrix2cd m;
  m << 1, 1, 0, 1;
  CHECK_THROWS_AS(U2Matrix(m), NotUnitary);
}

TEST_CASE("decompose_u2") {
  SECTION("identity") {
    auto p = decompose_u2(U2Matrix(Eigen::Matrix2cd::Identity()));
    CHECK(p.alpha == 0.0);
    CHECK(p.beta == 0.0);
    CHECK(p.phi0 == Approx(0.0).margin(1e-15));
    CHECK(p.phi1 == 0.0);
  }
  SECTION("z rotation") {
    const double th = 1.234;
    Eigen::Matrix2cd m;
    m << std::exp(-kI * th / 2.0), 0, 0, std::exp(kI * th / 2.0);
    auto p = decompose_u2(U2Matrix(m));
    CHECK(p.alpha == Approx(0.0).margin(1e-15));
    CHECK(p.beta == Approx(0.0).margin(1e-15));
    CHECK(p.phi0 == Approx(0.0).margin(1e-15));
    CHECK(p.phi1 == Approx(th));
  }
  SECTION("scalar matrix") {
    Eigen::Matrix2cd m = std::exp(-kI * 0.3) * Eigen::Matrix2cd::Identity();
    auto p = decompose_u2(U2Matrix(m));
    CHECK(p.phi1 == 0.0);
    CHECK(p.phi0 == Approx(0.3));
  }
  SECTION("random unitaries reconstruct") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
      Eigen::Matrix2cd u = oracle::random_u2(rng);
      auto p = decompose_u2(U2Matrix(u));
      CHECK(p.beta >= 0.0);
      CHECK(p.beta <= kPi);
      CHECK(oracle::max_abs(reconstruct_u2(p) - u) < 1e-12);
    }
  }
}

TEST_CASE("universal_gate_matrix") {
  CHECK(oracle::max_abs(
            universal_gate_matrix(U2Matrix(Eigen::Matrix2cd::Identity()), 3).matrix() -
            Eigen::MatrixXcd::Identity(8, 8)) == 0.0);

  Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  CHECK(oracle::max_abs(
            universal_gate_matrix(U2Matrix(oracle::sigma('x')), 2).matrix() - cnot) == 0.0);

  // Deutsch's gate: i R_x(theta) on the target.
  const double th = 0.37;
  Eigen::Matrix2cd deutsch = kI * oracle::expm_hermitian(oracle::sigma('x'), th / 2);
  CHECK(oracle::max_abs(
            universal_gate_matrix(U2Matrix(deutsch), 3).matrix() -
            block_universal(deutsch, 3)) < 1e-15);
}

TEST_CASE("compile_controlled_u") {
  SECTION("three qubits: 6 ZZ, at most 13 rotations, one phase") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::Matrix2cd u = oracle::random_u2(rng);
      auto seq = compile_controlled_u(U2Matrix(u), 3);
      auto c = gate_counts(seq);
      CHECK(c.zz == 6);
      CHECK(c.one_qubit <= 13);
      CHECK(c.phase == 1);
      CHECK(oracle::phase_distance(sequence_unitary(seq).matrix(), block_universal(u, 3)) <
            1e-10);
    }
  }
  SECTION("two qubits: T conjugation around PHASE, 2 RZ, 1 ZZ") {
    std::mt19937_64 rng(47);
    Eigen::Matrix2cd u = oracle::random_u2(rng);
    auto seq = compile_controlled_u(U2Matrix(u), 2);
    REQUIRE(seq.size() == 8);
    CHECK(seq[0].kind() == GateKind::RZ);
    CHECK(seq[1].kind() == GateKind::RY);
    CHECK(seq[2].kind() == GateKind::GPhase);
    CHECK(seq[3].kind() == GateKind::RZ);
    CHECK(seq[4].kind() == GateKind::RZ);
    CHECK(seq[5].kind() == GateKind::ZZ);
    CHECK(seq[6].kind() == GateKind::RY);
    CHECK(seq[7].kind() == GateKind::RZ);
    CHECK(oracle::max_abs(sequence_unitary(seq).matrix() - block_universal(u, 2)) < 1e-10);
  }
  SECTION("identity compiles to nothing") {
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(compile_controlled_u(U2Matrix(Eigen::Matrix2cd::Identity()), n).empty());
    }
  }
  SECTION("single qubit is u itself") {
    std::mt19937_64 rng(53);
    Eigen::Matrix2cd u = oracle::random_u2(rng);
    auto seq = compile_controlled_u(U2Matrix(u), 1);
    CHECK(oracle::max_abs(sequence_unitary(seq).matrix() - u) < 1e-12);
  }
  SECTION("scalar u is a controlled phase, exact including global phase") {
    Eigen::Matrix2cd u = std::exp(-kI * 0.9) * Eigen::Matrix2cd::Identity();
    for (unsigned n = 1; n <= 4; ++n) {
      auto seq = compile_controlled_u(U2Matrix(u), n);
      CHECK(oracle::max_abs(sequence_unitary(seq).matrix() - block_universal(u, n)) < 1e-10);
      std::vector<double> theta(std::size_t{1} << n, 0.0);
      theta[theta.size() - 1] = 0.9;
      theta[theta.size() - 2] = 0.9;
      CHECK(seq == compile_diagonal(PhaseVector(n, theta)));
    }
  }
  SECTION("exact unitary for n <= 6, random u") {
    std::mt19937_64 rng(59);
    for (unsigned n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        Eigen::Matrix2cd u = oracle::random_u2(rng);
        auto seq = compile_controlled_u(U2Matrix(u), n);
        CHECK(oracle::max_abs(sequence_unitary(seq).matrix() - block_universal(u, n)) <
              1e-10);
      }
    }
  }
}

TEST_CASE("gate counts of compile_controlled_u follow the Z-string law") {
  // Core phases on |1..10>, |1..11> give every subset of the n qubits a
  // nonzero Walsh coefficient (generic u), so the counts are
  // sum_{m>=2} C(n,m)(2m-3) ZZ and n + sum_{m>=3} C(n,m) 6(m-2) + 4 rotations.
  auto binom = [](unsigned n, unsigned k) {
    double r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::size_t>(r + 0.5);
  };
  std::mt19937_64 rng(61);
  for (unsigned n = 1; n <= 6; ++n) {
    std::size_t zz = 0;
    std::size_t one = n + 4;
    for (unsigned m = 2; m <= n; ++m) {
      zz += binom(n, m) * (2 * m - 3);
      one += binom(n, m) * 6 * (m - 2);
    }
    for (int trial = 0; trial < 50; ++trial) {
      auto c = gate_counts(compile_controlled_u(U2Matrix(oracle::random_u2(rng)), n));
      CHECK(c.zz == zz);
      CHECK(c.one_qubit <= one);
      CHECK(c.phase <= 1);
    }
  }
}

TEST_CASE("Walsh-Hadamard") {
  SECTION("one qubit is the Hadamard matrix") {
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    CHECK(oracle::max_abs(sequence_unitary(build_walsh_hadamard(1)).matrix() - h) < 1e-12);
  }
  SECTION("two qubits has entries +-1/2 with Hadamard signs") {
    auto w = sequence_unitary(build_walsh_hadamard(2)).matrix();
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    CHECK(oracle::max_abs(w - oracle::kron(h, h)) < 1e-12);
    CHECK(oracle::max_abs(w.cwiseAbs() - Eigen::MatrixXd::Constant(4, 4, 0.5)) < 1e-12);
  }
  SECTION("involution and tensor structure") {
    for (unsigned n = 1; n <= 6; ++n) {
      auto w = sequence_unitary(build_walsh_hadamard(n));
      CHECK(oracle::phase_distance(
                w.matrix() * w.matrix(),
                Eigen::MatrixXcd::Identity(w.dimension(), w.dimension())) < 1e-10);
      CHECK(oracle::max_abs(w.matrix() - reference::walsh_hadamard(n).matrix()) < 1e-10);
    }
  }
}

TEST_CASE("compile_conditional_phase") {
  CHECK(compile_conditional_phase(3, 5, 0.0).empty());
  CHECK_THROWS_AS(compile_conditional_phase(3, 8, kPi), std::out_of_range);

  auto u2 = sequence_unitary(compile_conditional_phase(2, 3, kPi)).matrix();
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(4, 4);
  expected(3, 3) = -1.0;
  CHECK(oracle::max_abs(u2 - expected) < 1e-10);

  auto u3 = sequence_unitary(compile_conditional_phase(3, 5, kPi)).matrix();
  int negatives = 0;
  for (Eigen::Index x = 0; x < 8; ++x) {
    if (std::abs(u3(x, x) + 1.0) < 1e-10) {
      ++negatives;
      CHECK(x == 5);
    } else {
      CHECK(std::abs(u3(x, x) - 1.0) < 1e-10);
    }
  }
  CHECK(negatives == 1);
  CHECK(u3.cwiseAbs().sum() == Approx(8.0));
}

TEST_CASE("Grover iteration equals the standard operator") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::size_t s : {std::size_t{0}, (std::size_t{1} << n) - 1, std::size_t{1} % (std::size_t{1} << n)}) {
      auto u = sequence_unitary(build_grover_iteration(n, s));
      CHECK(operator_distance(u, reference::grover_iteration(n, s)) < 1e-10);
      CHECK(u.unitarity_error() < 1e-12);
    }
  }
  CHECK_THROWS_AS(build_grover_iteration(2, 4), std::out_of_range);
}

TEST_CASE("Deutsch-Jozsa oracle") {
  SECTION("constant zero is empty") {
    CHECK(compile_deutsch_jozsa(TruthTable(3, std::vector<int>(8, 0))).empty());
  }
  SECTION("constant one is a single PHASE(pi)") {
    auto seq = compile_deutsch_jozsa(TruthTable(3, std::vector<int>(8, 1)));
    REQUIRE(seq.size() == 1);
    CHECK(seq[0].kind() == GateKind::GPhase);
    CHECK(seq[0].angle() == Approx(kPi));
  }
  SECTION("parity on two inputs") {
    TruthTable f(2, {0, 1, 1, 0});
    CHECK(f.is_balanced());
    auto seq = compile_deutsch_jozsa(f);
    auto c = gate_counts(seq);
    CHECK(c.zz == 1);
    CHECK(c.one_qubit == 0);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected.diagonal() << 1, -1, -1, 1;
    CHECK(oracle::max_abs(sequence_unitary(seq).matrix() - expected) < 1e-10);
  }
  SECTION("random tables up to 8 inputs") {
    std::mt19937_64 rng(67);
    for (unsigned n = 1; n <= 8; ++n) {
      std::vector<int> v(std::size_t{1} << n);
      for (auto &b : v) b = static_cast<int>(rng() % 2);
      TruthTable f(n, v);
      auto u = sequence_unitary(compile_deutsch_jozsa(f));
      CHECK(operator_distance(u, reference::deutsch_jozsa_oracle(f)) < 1e-10);
    }
  }
  SECTION("validation") {
    CHECK_THROWS_AS(TruthTable(2, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(TruthTable(2, {0, 1}), std::invalid_argument);
  }
}

TEST_CASE("gate_counts tallies") {
  CHECK(gate_counts(GateSequence(2)) == GateCounts{});
  GateSequence seq(3);
  seq.push_back(Gate::phase(0.1));
  seq.push_back(Gate::rx(0, 0.2));
  seq.push_back(Gate::zz(0, 2, 0.3));
  seq.push_back(Gate::ry(1, 0.4));
  auto c = gate_counts(seq);
  CHECK(c.zz == 1);
  CHECK(c.one_qubit == 2);
  CHECK(c.phase == 1);
  CHECK(c.total() == seq.size());
}

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
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "zzgate/errors.hpp"
#include "zzgate/simulator.hpp"

using namespace zzgate;
using Catch::Approx;

namespace {

constexpr Complex kI{0.0, 1.0};

Gate random_gate(std::mt19937_64 &rng, unsigned n) {
  std::uniform_real_distribution<double> ang(-2 * kPi, 2 * kPi);
  const auto k = static_cast<unsigned>(rng() % n);
  switch (rng() % (n > 1 ? 5 : 4)) {
    case 0:
      return Gate::rx(k, ang(rng));
    case 1:
      return Gate::ry(k, ang(rng));
    case 2:
      return Gate::rz(k, ang(rng));
    case 3:
      return Gate::phase(ang(rng));
    default: {
      auto l = static_cast<unsigned>(rng() % (n - 1));
      if (l >= k) ++l;
      return Gate::zz(k, l, ang(rng));
    }
  }
}

GateSequence random_sequence(std::mt19937_64 &rng, unsigned n, unsigned length) {
  GateSequence seq(n);
  for (unsigned i = 0; i < length; ++i) seq.push_back(random_gate(rng, n));
  return seq;
}

// Gate matrix straight from exp(-i angle G) with G built from Kronecker
// products of spin operators.
Eigen::MatrixXcd dense_gate(const Gate &g, unsigned n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  switch (g.kind()) {
    case GateKind::RX:
      return oracle::expm_hermitian(oracle::spin_op(n, g.qubit(), 'x'), g.angle());
    case GateKind::RY:
      return oracle::expm_hermitian(oracle::spin_op(n, g.qubit(), 'y'), g.angle());
    case GateKind::RZ:
      return oracle::expm_hermitian(oracle::spin_op(n, g.qubit(), 'z'), g.angle());
    case GateKind::ZZ: {
      Eigen::MatrixXcd h =
          2.0 * oracle::spin_op(n, g.qubit(), 'z') * oracle::spin_op(n, g.second(), 'z');
      return oracle::expm_hermitian(h, g.angle());
    }
    case GateKind::GPhase:
      return std::exp(-kI * g.angle()) * Eigen::MatrixXcd::Identity(d, d);
  }
  return {};
}

Eigen::MatrixXcd random_unitary(std::mt19937_64 &rng, Eigen::Index d) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
}

}  // namespace

TEST_CASE("apply_gate examples") {
  SECTION("RZ on |0> picks up e^{-i theta/2}") {
    const double th = 0.81;
    auto psi = apply_gate(Gate::rz(0, th), StateVector(1));
    CHECK(std::abs(psi[0] - std::exp(-kI * th / 2.0)) < 1e-15);
    CHECK(std::abs(psi[1]) == 0.0);
  }
  SECTION("ZZ on |01> picks up e^{i lambda/2}") {
    const double lam = 1.3;
    auto psi = apply_gate(Gate::zz(0, 1, lam), StateVector::basis_state(2, 1));
    CHECK(std::abs(psi[1] - std::exp(kI * lam / 2.0)) < 1e-15);
  }
  SECTION("ZZ matrix is diag(e^{-il/2}, e^{il/2}, e^{il/2}, e^{-il/2})") {
    const double lam = -0.6;
    GateSequence seq(2);
    seq.push_back(Gate::zz(0, 1, lam));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected.diagonal() << std::exp(-kI * lam / 2.0), std::exp(kI * lam / 2.0),
        std::exp(kI * lam / 2.0), std::exp(-kI * lam / 2.0);
    CHECK(oracle::max_abs(sequence_unitary(seq).matrix() - expected) < 1e-15);
  }
  SECTION("RY(pi/2) twice is RY(pi)") {
    GateSequence twice(1);
    twice.push_back(Gate::ry(0, kPi / 2));
    twice.push_back(Gate::ry(0, kPi / 2));
    GateSequence once(1);
    once.push_back(Gate::ry(0, kPi));
    CHECK(operator_distance(sequence_unitary(twice), sequence_unitary(once)) < 1e-15);
  }
  SECTION("out-of-range index") {
    StateVector psi(2);
    CHECK_THROWS_AS(psi.apply(Gate::rx(2, 0.1)), std::out_of_range);
    CHECK_THROWS_AS(psi.apply(Gate::zz(0, 3, 0.1)), std::out_of_range);
  }
}

TEST_CASE("every gate kind matches its dense exponential") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + trial % 4;
    const Gate g = random_gate(rng, n);
    GateSequence seq(n);
    seq.push_back(g);
    CHECK(oracle::max_abs(sequence_unitary(seq).matrix() - dense_gate(g, n)) < 1e-12);
  }
}

TEST_CASE("state application agrees with the unitary") {
  std::mt19937_64 rng(73);
  for (unsigned n = 1; n <= 6; ++n) {
    GateSequence seq = random_sequence(rng, n, 40);
    const std::size_t x = rng() % (std::size_t{1} << n);
    StateVector psi = StateVector::basis_state(n, x);
    psi.apply(seq);
    auto col = sequence_unitary(seq).matrix().col(static_cast<Eigen::Index>(x));
    CHECK((psi.amplitudes() - col).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("norm is preserved after every gate") {
  std::mt19937_64 rng(79);
  for (unsigned n = 1; n <= 10; ++n) {
    StateVector psi(n);
    for (int step = 0; step < 60; ++step) {
      psi.apply(random_gate(rng, n));
      REQUIRE(std::abs(psi.norm() - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("sequence_unitary") {
  SECTION("empty is identity") {
    CHECK(operator_distance(sequence_unitary(GateSequence(3)), DenseUnitary(3)) == 0.0);
  }
  SECTION("inverse pair") {
    GateSequence seq(1);
    seq.push_back(Gate::rx(0, kPi / 2));
    seq.push_back(Gate::rx(0, -kPi / 2));
    CHECK(operator_distance(sequence_unitary(seq), DenseUnitary(1)) < 1e-15);
  }
  SECTION("later gates multiply on the left") {
    GateSequence seq(1);
    seq.push_back(Gate::rx(0, 0.4));
    seq.push_back(Gate::ry(0, 0.9));
    Eigen::MatrixXcd expected = dense_gate(seq[1], 1) * dense_gate(seq[0], 1);
    CHECK(oracle::max_abs(sequence_unitary(seq).matrix() - expected) < 1e-14);
  }
  SECTION("sequence then its inverse is identity") {
    std::mt19937_64 rng(83);
    for (unsigned n = 1; n <= 6; ++n) {
      GateSequence seq = random_sequence(rng, n, 50);
      GateSequence both = seq;
      both.append(seq.inverse());
      auto u = sequence_unitary(both);
      CHECK(operator_distance(u, DenseUnitary(n)) < 1e-10);
      CHECK(sequence_unitary(seq).unitarity_error() < 1e-9);
    }
  }
  SECTION("cap") {
    CHECK_THROWS_AS(sequence_unitary(GateSequence(13)), std::invalid_argument);
    CHECK_NOTHROW(sequence_unitary(GateSequence(3), 3));
    CHECK_THROWS_AS(sequence_unitary(GateSequence(4), 3), std::invalid_argument);
  }
}

TEST_CASE("distance_up_to_phase") {
  std::mt19937_64 rng(89);
  SECTION("examples") {
    DenseUnitary u(3, random_unitary(rng, 8));
    CHECK(distance_up_to_phase(u, u) < 1e-15);
    DenseUnitary v(3, std::exp(kI * kPi / 7.0) * u.matrix());
    CHECK(distance_up_to_phase(u, v) < 1e-14);
    Eigen::MatrixXcd x_on_first = oracle::kron(oracle::sigma('x'), Eigen::Matrix2cd::Identity());
    CHECK(distance_up_to_phase(DenseUnitary(2), DenseUnitary(2, x_on_first)) >= 1.0);
    CHECK_THROWS_AS(distance_up_to_phase(DenseUnitary(2), DenseUnitary(3)),
                    DimensionMismatch);
  }
  SECTION("symmetry") {
    for (int trial = 0; trial < 100; ++trial) {
      DenseUnitary a(2, random_unitary(rng, 4));
      DenseUnitary b(2, random_unitary(rng, 4));
      CHECK(std::abs(distance_up_to_phase(a, b) - distance_up_to_phase(b, a)) < 1e-9);
    }
  }
  SECTION("triangle inequality on nearby triples") {
    // Triples near a common unitary, each perturbed by a small random
    // Hermitian generator and an arbitrary global phase.
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    auto perturb = [&](const Eigen::MatrixXcd &base, double eps) {
      Eigen::MatrixXcd h(base.rows(), base.cols());
      for (Eigen::Index i = 0; i < h.rows(); ++i) {
        for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = Complex(g(rng), g(rng));
      }
      h = (h + h.adjoint()).eval() / 2.0;
      return Eigen::MatrixXcd(std::exp(kI * phase(rng)) * oracle::expm_hermitian(h, eps) *
                              base);
    };
    for (int trial = 0; trial < 300; ++trial) {
      const Eigen::MatrixXcd base = random_unitary(rng, 4);
      const double eps = std::pow(10.0, -1.0 - 3.0 * (trial % 5) / 4.0);
      DenseUnitary a(2, perturb(base, eps));
      DenseUnitary b(2, perturb(base, eps));
      DenseUnitary c(2, perturb(base, eps));
      CHECK(distance_up_to_phase(a, c) <=
            distance_up_to_phase(a, b) + distance_up_to_phase(b, c) + 1e-9);
    }
  }
}

TEST_CASE("exponential_of_zpoly") {
  CHECK(operator_distance(exponential_of_zpoly(ZPolynomial(3)), DenseUnitary(3)) == 0.0);

  const double lam = 0.55;
  ZPolynomial zp(2);
  zp.add({0, 1}, lam);
  GateSequence zz(2);
  zz.push_back(Gate::zz(0, 1, lam));
  CHECK(operator_distance(exponential_of_zpoly(zp), sequence_unitary(zz)) < 1e-15);

  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (unsigned n = 1; n <= 7; ++n) {
    ZPolynomial r(n, u(rng));
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      QubitSubset s;
      for (unsigned j = 0; j < n; ++j) {
        if (mask & (std::size_t{1} << j)) s.push_back(j);
      }
      r.add(s, u(rng));
    }
    CHECK(operator_distance(exponential_of_zpoly(r), sequence_unitary(zpoly_to_sequence(r))) <
          1e-10);
  }
}

TEST_CASE("simulate_grover") {
  CHECK(simulate_grover(1, 0, 0) == Approx(0.5).margin(1e-12));
  for (std::size_t s = 0; s < 4; ++s) {
    CHECK(simulate_grover(2, s, 1) == Approx(1.0).margin(1e-10));
  }
  CHECK(simulate_grover(3, 5, 2) == Approx(0.9453).margin(1e-4));
  for (unsigned n = 1; n <= 6; ++n) {
    const double theta = std::asin(std::pow(2.0, -0.5 * n));
    for (unsigned k = 0; k <= 10; ++k) {
      const double expected = std::pow(std::sin((2 * k + 1) * theta), 2);
      CHECK(std::abs(simulate_grover(n, (std::size_t{1} << n) - 1 - k % 2, k) - expected) <
            1e-9);
    }
  }
  CHECK_THROWS_AS(simulate_grover(2, 4, 1), std::out_of_range);
}

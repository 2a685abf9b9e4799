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
 * Cartesian product operators for N spin-1/2 particles.
 *
 * A ProductOperator is c * I_{1a} I_{2b} ... I_{Nd} where every factor is
 * E (unit operator) or one of the spin components I_x, I_y, I_z = sigma/2.
 * The usual 2^{n-1} normalisation of a basis element lives in the
 * coefficient, so "2 I1z I2z" has factors (Z, Z) and coefficient 2.
 *
 * Spins are 0-based in this API. The operator text syntax used by the CLI
 * (parse_operator / to_string) is 1-based.
 */

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace zzgate {

using Complex = std::complex<double>;

/** Coefficients with magnitude below this are dropped after arithmetic. */
inline constexpr double kDropTolerance = 1e-12;

enum class Pauli : std::uint8_t { E = 0, X = 1, Y = 2, Z = 3 };

using PauliString = std::vector<Pauli>;

char pauli_char(Pauli p);

class ProductOperator {
 public:
  ProductOperator(PauliString factors, Complex coefficient = 1.0);

  /** c * E on n spins. */
  static ProductOperator identity(unsigned n_spins, Complex coefficient = 1.0);

  /** c * I_{spin, axis}. */
  static ProductOperator single(
      unsigned n_spins, unsigned spin, Pauli axis, Complex coefficient = 1.0);

  /** 2^{|spins|-1} * prod_{k in spins} I_{k,axis}, the normalised basis
   *  element. */
  static ProductOperator basis(
      unsigned n_spins, const std::vector<unsigned> &spins, Pauli axis);

  unsigned n_spins() const { return static_cast<unsigned>(factors_.size()); }
  const PauliString &factors() const { return factors_; }
  Complex coefficient() const { return coefficient_; }
  bool is_identity() const;

  /** Number of non-E factors. */
  unsigned weight() const;

 private:
  PauliString factors_;
  Complex coefficient_;
};

/** A finite sum of product operators with unique factor keys. */
class PauliPolynomial {
 public:
  using TermMap = std::map<PauliString, Complex>;

  explicit PauliPolynomial(unsigned n_spins);
  PauliPolynomial(const ProductOperator &op);  // NOLINT

  unsigned n_spins() const { return n_spins_; }
  const TermMap &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /** Coefficient of the given factor string (0 if absent). */
  Complex coefficient(const PauliString &factors) const;

  void add_term(const PauliString &factors, Complex coefficient);
  void add_term(const ProductOperator &op);

  std::vector<ProductOperator> product_operators() const;

  PauliPolynomial dagger() const;

  PauliPolynomial &operator+=(const PauliPolynomial &other);
  PauliPolynomial &operator-=(const PauliPolynomial &other);
  PauliPolynomial &operator*=(Complex scalar);

  friend PauliPolynomial operator+(PauliPolynomial a, const PauliPolynomial &b) {
    return a += b;
  }
  friend PauliPolynomial operator-(PauliPolynomial a, const PauliPolynomial &b) {
    return a -= b;
  }
  friend PauliPolynomial operator*(PauliPolynomial a, Complex s) {
    return a *= s;
  }
  friend PauliPolynomial operator*(Complex s, PauliPolynomial a) {
    return a *= s;
  }

  /** Equality up to an absolute coefficient tolerance. */
  bool approx_equal(const PauliPolynomial &other, double tol = 1e-12) const;

 private:
  unsigned n_spins_;
  TermMap terms_;
};

/** Per-spin product I_a I_b = (1/4) delta_ab E + (i/2) eps_abc I_c. */
ProductOperator multiply(const ProductOperator &a, const ProductOperator &b);

PauliPolynomial multiply(const PauliPolynomial &a, const PauliPolynomial &b);

PauliPolynomial operator*(const PauliPolynomial &a, const PauliPolynomial &b);

/** ab - ba. */
PauliPolynomial commutator(const ProductOperator &a, const ProductOperator &b);

PauliPolynomial commutator(const PauliPolynomial &a, const PauliPolynomial &b);

/**
 * exp(-i angle G) T exp(i angle G) for a product-operator generator G with
 * real coefficient.
 *
 * Two product operators either commute or anticommute, so the nested
 * commutator series collapses: [G,[G,T]] = alpha T with alpha >= 0 and the
 * result is T cos(sqrt(alpha) angle) - (i/sqrt(alpha)) [G,T]
 * sin(sqrt(alpha) angle).
 *
 * Throws std::invalid_argument for a complex generator coefficient.
 */
PauliPolynomial conjugate_bch(
    const ProductOperator &generator, double angle,
    const ProductOperator &target);

/** Termwise conjugate_bch. */
PauliPolynomial conjugate_bch(
    const ProductOperator &generator, double angle,
    const PauliPolynomial &target);

/** Dense 2^n x 2^n matrix, spin 0 is the most significant bit. */
Eigen::MatrixXcd to_dense(const ProductOperator &op);
Eigen::MatrixXcd to_dense(const PauliPolynomial &op);

/**
 * Parse "[coeff] I<k><axis> [I<l><axis> ...]" terms joined by '+' or '-'.
 * Spins are 1-based; axes are case-insensitive. When n_spins is 0 the
 * largest spin index mentioned is used.
 */
PauliPolynomial parse_operator(std::string_view text, unsigned n_spins = 0);

/** Inverse of parse_operator for real coefficients; complex ones print as
 *  "(re,im)". */
std::string to_string(const PauliPolynomial &op);

}  // namespace zzgate

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

#include "zzgate/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "zzgate/errors.hpp"

namespace zzgate {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_dims(unsigned a, unsigned b) {
  if (a != b) {
    throw DimensionMismatch(
        std::to_string(a) + " spins vs " + std::to_string(b) + " spins");
  }
}

// Product of single-spin factors: returns (scalar, factor).
std::pair<Complex, Pauli> multiply_factor(Pauli a, Pauli b) {
  if (a == Pauli::E) return {1.0, b};
  if (b == Pauli::E) return {1.0, a};
  if (a == b) return {0.25, Pauli::E};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  // X=1, Y=2, Z=3: the third axis is 6 - a - b, cyclic order gives +.
  const auto c = static_cast<Pauli>(6 - ia - ib);
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? 0.5 * kI : -0.5 * kI, c};
}

Eigen::Matrix2cd single_spin_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::E:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 0.5, 0.5, 0;
      break;
    case Pauli::Y:
      m << 0, -0.5 * kI, 0.5 * kI, 0;
      break;
    case Pauli::Z:
      m << 0.5, 0, 0, -0.5;
      break;
  }
  return m;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::E:
      return 'E';
    case Pauli::X:
      return 'x';
    case Pauli::Y:
      return 'y';
    case Pauli::Z:
      return 'z';
  }
  return '?';
}

ProductOperator::ProductOperator(PauliString factors, Complex coefficient)
    : factors_(std::move(factors)), coefficient_(coefficient) {
  if (factors_.empty()) {
    throw std::invalid_argument("product operator needs at least one spin");
  }
}

ProductOperator ProductOperator::identity(unsigned n_spins, Complex coefficient) {
  return ProductOperator(PauliString(n_spins, Pauli::E), coefficient);
}

ProductOperator ProductOperator::single(
    unsigned n_spins, unsigned spin, Pauli axis, Complex coefficient) {
  if (spin >= n_spins) {
    throw std::out_of_range(
        "spin " + std::to_string(spin) + " out of range for " +
        std::to_string(n_spins) + " spins");
  }
  PauliString f(n_spins, Pauli::E);
  f[spin] = axis;
  return ProductOperator(std::move(f), coefficient);
}

ProductOperator ProductOperator::basis(
    unsigned n_spins, const std::vector<unsigned> &spins, Pauli axis) {
  PauliString f(n_spins, Pauli::E);
  for (unsigned s : spins) {
    if (s >= n_spins) throw std::out_of_range("spin index out of range");
    if (f[s] != Pauli::E) throw std::invalid_argument("repeated spin index");
    f[s] = axis;
  }
  const double norm =
      spins.empty() ? 1.0 : std::ldexp(1.0, static_cast<int>(spins.size()) - 1);
  return ProductOperator(std::move(f), norm);
}

bool ProductOperator::is_identity() const {
  return std::all_of(factors_.begin(), factors_.end(), [](Pauli p) {
    return p == Pauli::E;
  });
}

unsigned ProductOperator::weight() const {
  return static_cast<unsigned>(
      std::count_if(factors_.begin(), factors_.end(), [](Pauli p) {
        return p != Pauli::E;
      }));
}

PauliPolynomial::PauliPolynomial(unsigned n_spins) : n_spins_(n_spins) {
  if (n_spins == 0) {
    throw std::invalid_argument("polynomial needs at least one spin");
  }
}

PauliPolynomial::PauliPolynomial(const ProductOperator &op)
    : n_spins_(op.n_spins()) {
  add_term(op);
}

Complex PauliPolynomial::coefficient(const PauliString &factors) const {
  auto it = terms_.find(factors);
  return it == terms_.end() ? Complex{0.0} : it->second;
}

void PauliPolynomial::add_term(const PauliString &factors, Complex coefficient) {
  check_dims(n_spins_, static_cast<unsigned>(factors.size()));
  auto [it, inserted] = terms_.try_emplace(factors, coefficient);
  if (!inserted) it->second += coefficient;
  if (std::abs(it->second) < kDropTolerance) terms_.erase(it);
}

void PauliPolynomial::add_term(const ProductOperator &op) {
  add_term(op.factors(), op.coefficient());
}

std::vector<ProductOperator> PauliPolynomial::product_operators() const {
  std::vector<ProductOperator> out;
  out.reserve(terms_.size());
  for (const auto &[f, c] : terms_) out.emplace_back(f, c);
  return out;
}

PauliPolynomial PauliPolynomial::dagger() const {
  PauliPolynomial out(n_spins_);
  for (const auto &[f, c] : terms_) out.add_term(f, std::conj(c));
  return out;
}

PauliPolynomial &PauliPolynomial::operator+=(const PauliPolynomial &other) {
  check_dims(n_spins_, other.n_spins_);
  for (const auto &[f, c] : other.terms_) add_term(f, c);
  return *this;
}

PauliPolynomial &PauliPolynomial::operator-=(const PauliPolynomial &other) {
  check_dims(n_spins_, other.n_spins_);
  for (const auto &[f, c] : other.terms_) add_term(f, -c);
  return *this;
}

PauliPolynomial &PauliPolynomial::operator*=(Complex scalar) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (std::abs(it->second) < kDropTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

bool PauliPolynomial::approx_equal(const PauliPolynomial &other, double tol) const {
  if (n_spins_ != other.n_spins_) return false;
  PauliPolynomial diff = *this - other;
  return std::all_of(diff.terms_.begin(), diff.terms_.end(), [tol](const auto &t) {
    return std::abs(t.second) <= tol;
  });
}

ProductOperator multiply(const ProductOperator &a, const ProductOperator &b) {
  check_dims(a.n_spins(), b.n_spins());
  PauliString f(a.n_spins());
  Complex c = a.coefficient() * b.coefficient();
  for (unsigned k = 0; k < a.n_spins(); ++k) {
    auto [s, p] = multiply_factor(a.factors()[k], b.factors()[k]);
    c *= s;
    f[k] = p;
  }
  return ProductOperator(std::move(f), c);
}

PauliPolynomial multiply(const PauliPolynomial &a, const PauliPolynomial &b) {
  check_dims(a.n_spins(), b.n_spins());
  PauliPolynomial out(a.n_spins());
  for (const auto &[fa, ca] : a.terms()) {
    for (const auto &[fb, cb] : b.terms()) {
      out.add_term(multiply(ProductOperator(fa, ca), ProductOperator(fb, cb)));
    }
  }
  return out;
}

PauliPolynomial operator*(const PauliPolynomial &a, const PauliPolynomial &b) {
  return multiply(a, b);
}

PauliPolynomial commutator(const ProductOperator &a, const ProductOperator &b) {
  check_dims(a.n_spins(), b.n_spins());
  ProductOperator ab = multiply(a, b);
  ProductOperator ba = multiply(b, a);
  PauliPolynomial out(a.n_spins());
  out.add_term(ab);
  out.add_term(ba.factors(), -ba.coefficient());
  return out;
}

PauliPolynomial commutator(const PauliPolynomial &a, const PauliPolynomial &b) {
  return multiply(a, b) - multiply(b, a);
}

PauliPolynomial conjugate_bch(
    const ProductOperator &generator, double angle,
    const ProductOperator &target) {
  check_dims(generator.n_spins(), target.n_spins());
  if (std::abs(generator.coefficient().imag()) > kDropTolerance) {
    throw std::invalid_argument("conjugate_bch: generator must be Hermitian");
  }
  if (std::abs(target.coefficient()) < kDropTolerance) {
    return PauliPolynomial(target.n_spins());
  }
  const ProductOperator g(generator.factors(), generator.coefficient().real());
  PauliPolynomial first = commutator(g, target);
  if (first.is_zero()) return PauliPolynomial(target);

  // [G,T] is a single product operator here; the double commutator is again
  // proportional to T.
  const ProductOperator c1 = first.product_operators().front();
  PauliPolynomial second = commutator(g, c1);
  if (second.size() != 1 || second.terms().begin()->first != target.factors()) {
    throw std::logic_error("conjugate_bch: double commutator not closed");
  }
  const Complex ratio = second.terms().begin()->second / target.coefficient();
  const double alpha = ratio.real();
  if (std::abs(ratio.imag()) > 1e-9 * std::max(1.0, std::abs(alpha)) ||
      alpha <= 0.0) {
    throw std::logic_error("conjugate_bch: unexpected double-commutator scalar");
  }
  const double root = std::sqrt(alpha);
  PauliPolynomial out = PauliPolynomial(target) * Complex(std::cos(root * angle));
  out += first * (-kI * std::sin(root * angle) / root);
  return out;
}

PauliPolynomial conjugate_bch(
    const ProductOperator &generator, double angle,
    const PauliPolynomial &target) {
  check_dims(generator.n_spins(), target.n_spins());
  PauliPolynomial out(target.n_spins());
  for (const auto &op : target.product_operators()) {
    out += conjugate_bch(generator, angle, op);
  }
  return out;
}

Eigen::MatrixXcd to_dense(const ProductOperator &op) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1) * op.coefficient();
  for (Pauli p : op.factors()) {
    const Eigen::Matrix2cd s = single_spin_matrix(p);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        next.block<2, 2>(2 * r, 2 * c) = m(r, c) * s;
      }
    }
    m = std::move(next);
  }
  return m;
}

Eigen::MatrixXcd to_dense(const PauliPolynomial &op) {
  const Eigen::Index dim = Eigen::Index{1} << op.n_spins();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto &term : op.product_operators()) m += to_dense(term);
  return m;
}

namespace {

class OperatorParser {
 public:
  explicit OperatorParser(std::string_view text) : text_(text) {}

  struct RawTerm {
    double coefficient = 1.0;
    std::vector<std::pair<unsigned, Pauli>> factors;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_space();
    if (at_end()) throw ParseError("empty operator string");
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1.0 : 1.0;
    }
    while (true) {
      RawTerm t = parse_term();
      t.coefficient *= sign;
      terms.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') {
        throw ParseError(
            "expected '+' or '-' at position " + std::to_string(pos_ - 1));
      }
      sign = op == '-' ? -1.0 : 1.0;
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  RawTerm parse_term() {
    RawTerm t;
    skip_space();
    if (at_end()) throw ParseError("dangling operator at end of string");
    bool coefficient_seen = false;
    if (peek() != 'I' && peek() != 'i') {
      t.coefficient = parse_number();
      coefficient_seen = true;
    }
    while (true) {
      skip_space();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (peek() != 'I' && peek() != 'i') {
        throw ParseError("unexpected '" + std::string(1, peek()) + "'");
      }
      ++pos_;
      t.factors.push_back(parse_factor());
    }
    if (t.factors.empty() && !coefficient_seen) {
      throw ParseError("term without factors");
    }
    return t;
  }

  double parse_number() {
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
    while (!at_end() &&
           (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
            peek() == 'e' || peek() == 'E' ||
            ((peek() == '+' || peek() == '-') && pos_ > start + 1 &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected coefficient");
    const std::string token(text_.substr(start, pos_ - start));
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw ParseError("bad number '" + token + "'");
      return v;
    } catch (const std::logic_error &) {
      throw ParseError("bad number '" + token + "'");
    }
  }

  std::pair<unsigned, Pauli> parse_factor() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected spin index after 'I'");
    unsigned spin = 0;
    const auto *b = text_.data() + start;
    const auto *e = text_.data() + pos_;
    if (std::from_chars(b, e, spin).ec != std::errc{} || spin == 0) {
      throw ParseError("spin indices are 1-based");
    }
    if (at_end()) throw ParseError("missing axis after spin index");
    Pauli axis;
    switch (std::tolower(static_cast<unsigned char>(take()))) {
      case 'x':
        axis = Pauli::X;
        break;
      case 'y':
        axis = Pauli::Y;
        break;
      case 'z':
        axis = Pauli::Z;
        break;
      default:
        throw ParseError("axis must be x, y or z");
    }
    return {spin - 1, axis};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PauliPolynomial parse_operator(std::string_view text, unsigned n_spins) {
  auto raw = OperatorParser(text).parse();
  unsigned max_spin = 0;
  for (const auto &t : raw) {
    for (const auto &[s, a] : t.factors) max_spin = std::max(max_spin, s + 1);
  }
  if (n_spins == 0) n_spins = std::max(1u, max_spin);
  if (max_spin > n_spins) {
    throw ParseError(
        "spin " + std::to_string(max_spin) + " exceeds " +
        std::to_string(n_spins) + " spins");
  }
  PauliPolynomial out(n_spins);
  for (const auto &t : raw) {
    // Repeated spins within a term are multiplied out.
    ProductOperator op = ProductOperator::identity(n_spins, t.coefficient);
    for (const auto &[s, a] : t.factors) {
      op = multiply(op, ProductOperator::single(n_spins, s, a));
    }
    out.add_term(op);
  }
  return out;
}

std::string to_string(const PauliPolynomial &op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[f, c] : op.terms()) {
    if (!first) os << " + ";
    first = false;
    if (std::abs(c.imag()) < kDropTolerance) {
      os << format_real(c.real());
    } else {
      os << '(' << format_real(c.real()) << ',' << format_real(c.imag()) << ')';
    }
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] != Pauli::E) os << " I" << (k + 1) << pauli_char(f[k]);
    }
  }
  return os.str();
}

}  // namespace zzgate

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

// zzgate: compile, verify, schedule, ion, classify.
//
// Exit codes: 0 success, 1 verification failed, 2 parse error,
// 3 semantic error.

#include <CLI11.hpp>
#include <algorithm>
#include <bit>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zzgate/coherence.hpp"
#include "zzgate/errors.hpp"
#include "zzgate/gate_compiler.hpp"
#include "zzgate/io.hpp"
#include "zzgate/pulse.hpp"
#include "zzgate/simulator.hpp"

namespace {

using namespace zzgate;

enum Exit { kOk = 0, kVerifyFail = 1, kParse = 2, kSemantic = 3 };

/** Thrown for requests the tool understands syntactically but cannot run. */
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const char *pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v + 0.0);
  return buf;
}

struct Source {
  std::string phases;
  std::string zpoly;
  std::string truth_table;
  std::string cu;
  std::string algorithm;
  std::optional<unsigned> qubits;
  std::size_t marked = 0;
  double phase = kPi;
  std::string oracle = "parity";
  unsigned max_qubits = 64;

  void add_options(CLI::App *cmd) {
    auto *group = cmd->add_option_group("source", "exactly one target source");
    group->add_option("--phases", phases, "phase-vector JSON file");
    group->add_option("--zpoly", zpoly, "z-polynomial JSON file");
    group->add_option("--truth-table", truth_table, "Deutsch-Jozsa truth-table JSON file");
    group->add_option("--cu", cu, "u(2) JSON file for the multi-controlled gate");
    group->add_option("--algorithm", algorithm,
                      "grover | walsh-hadamard | conditional-phase | deutsch-jozsa");
    cmd->add_option("--qubits", qubits, "qubit count for --cu and --algorithm");
    cmd->add_option("--marked", marked, "marked basis index (grover, conditional-phase)");
    cmd->add_option("--phase", phase, "phase for conditional-phase")->capture_default_str();
    cmd->add_option("--oracle", oracle, "constant0 | constant1 | parity (deutsch-jozsa)")
        ->capture_default_str();
  }

  int count() const {
    return !phases.empty() + !zpoly.empty() + !truth_table.empty() + !cu.empty() +
           !algorithm.empty();
  }

  unsigned need_qubits() const {
    if (!qubits) throw SemanticError("--qubits is required for this source");
    if (*qubits == 0) throw SemanticError("--qubits must be positive");
    if (*qubits > max_qubits) {
      throw SemanticError("--qubits exceeds the limit of " + std::to_string(max_qubits));
    }
    return *qubits;
  }

  TruthTable dj_table() const {
    if (!truth_table.empty()) return io::truth_table_from_json(io::read_file(truth_table));
    const unsigned n = need_qubits();
    std::vector<int> v(std::size_t{1} << n, 0);
    if (oracle == "constant1") {
      std::fill(v.begin(), v.end(), 1);
    } else if (oracle == "parity") {
      for (std::size_t x = 0; x < v.size(); ++x) v[x] = std::popcount(x) & 1;
    } else if (oracle != "constant0") {
      throw SemanticError("unknown oracle '" + oracle + "'");
    }
    return TruthTable(n, std::move(v));
  }

  void check() const {
    if (count() != 1) {
      throw SemanticError("give exactly one of --phases, --zpoly, --truth-table, --cu, --algorithm");
    }
  }

  GateSequence compile() const {
    check();
    if (!phases.empty()) {
      return compile_diagonal(io::phase_vector_from_json(io::read_file(phases)));
    }
    if (!zpoly.empty()) return zpoly_to_sequence(io::zpoly_from_json(io::read_file(zpoly)));
    if (!truth_table.empty()) return compile_deutsch_jozsa(dj_table());
    if (!cu.empty()) {
      return compile_controlled_u(io::u2_from_json(io::read_file(cu)), need_qubits());
    }
    if (algorithm == "grover") return build_grover_iteration(need_qubits(), marked);
    if (algorithm == "walsh-hadamard") return build_walsh_hadamard(need_qubits());
    if (algorithm == "conditional-phase") {
      return compile_conditional_phase(need_qubits(), marked, phase);
    }
    if (algorithm == "deutsch-jozsa") return compile_deutsch_jozsa(dj_table());
    throw SemanticError("unsupported algorithm '" + algorithm + "'");
  }

  DenseUnitary reference() const {
    check();
    if (!phases.empty()) {
      return diagonal_unitary(io::phase_vector_from_json(io::read_file(phases)));
    }
    if (!zpoly.empty()) return exponential_of_zpoly(io::zpoly_from_json(io::read_file(zpoly)));
    if (!truth_table.empty()) return reference::deutsch_jozsa_oracle(dj_table());
    if (!cu.empty()) {
      return universal_gate_matrix(io::u2_from_json(io::read_file(cu)), need_qubits());
    }
    if (algorithm == "grover") return reference::grover_iteration(need_qubits(), marked);
    if (algorithm == "walsh-hadamard") return reference::walsh_hadamard(need_qubits());
    if (algorithm == "conditional-phase") {
      return reference::conditional_phase(need_qubits(), marked, phase);
    }
    if (algorithm == "deutsch-jozsa") return reference::deutsch_jozsa_oracle(dj_table());
    throw SemanticError("unsupported algorithm '" + algorithm + "'");
  }
};

std::string counts_line(const GateSequence &seq) {
  const GateCounts c = gate_counts(seq);
  return "qubits=" + std::to_string(seq.n_qubits()) + " zz=" + std::to_string(c.zz) +
         " one_qubit=" + std::to_string(c.one_qubit) + " phase=" + std::to_string(c.phase) +
         " total=" + std::to_string(c.total());
}

int run_compile(const Source &src, const std::string &output) {
  const GateSequence seq = src.compile();
  const std::string text = to_text(seq);
  if (output.empty()) {
    std::cout << text;
    std::cerr << counts_line(seq) << '\n';
  } else {
    io::write_file(output, text);
    std::cout << counts_line(seq) << '\n';
  }
  return kOk;
}

int run_verify(const Source &src, const std::string &sequence_file, double tol) {
  const GateSequence seq = parse_sequence_text(io::read_file(sequence_file));
  if (seq.n_qubits() > kDefaultSimulatorCap) {
    throw SemanticError("verification is limited to " +
                        std::to_string(kDefaultSimulatorCap) + " qubits");
  }
  const DenseUnitary target = src.reference();
  if (target.n_qubits() != seq.n_qubits()) {
    throw SemanticError(
        "sequence acts on " + std::to_string(seq.n_qubits()) + " qubits, target on " +
        std::to_string(target.n_qubits()));
  }
  const double d = distance_up_to_phase(sequence_unitary(seq), target);
  const bool pass = d < tol;
  std::cout << "distance " << fmt("%.6e", d) << " tol " << fmt("%.3e", tol) << '\n'
            << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kOk : kVerifyFail;
}

int run_schedule(const std::string &graph_file, const std::vector<unsigned> &pair,
                 double tau, const std::string &output) {
  const CouplingGraph g = io::coupling_graph_from_json(io::read_file(graph_file));
  for (unsigned s : pair) {
    if (s < 1 || s > g.n_spins()) {
      throw SemanticError("spin " + std::to_string(s) + " not in 1.." +
                          std::to_string(g.n_spins()));
    }
  }
  const unsigned k = pair[0] - 1;
  const unsigned l = pair[1] - 1;
  if (k == l || !g.coupled(k, l)) {
    throw SemanticError("spins " + std::to_string(pair[0]) + " and " +
                        std::to_string(pair[1]) + " are not coupled");
  }
  const PulseSchedule s = build_refocus_schedule(g, k, l, tau);
  const std::string text = to_text(s);
  if (output.empty()) {
    std::cout << text;
  } else {
    io::write_file(output, text);
  }

  const ZPolynomial h = average_hamiltonian(s, g);
  std::ostream &rep = output.empty() ? std::cerr : std::cout;
  rep << "segments " << s.segments().size() << " duration "
      << fmt("%.17g", s.total_duration()) << '\n';
  rep << "average hamiltonian (rad)\n";
  for (unsigned i = 0; i < g.n_spins(); ++i) {
    rep << "  I" << i + 1 << "z " << fmt("%.17g", h.coefficient({i})) << '\n';
  }
  for (const auto &[key, hz] : g.couplings()) {
    rep << "  2 I" << key.first + 1 << "z I" << key.second + 1 << "z "
        << fmt("%.17g", h.coefficient({key.first, key.second})) << '\n';
  }
  rep << "surviving terms " << h.terms().size() << '\n';
  return kOk;
}

int run_ion(double lambda, double phi2, double theta2, double phi3) {
  const IonPulseParams p = ion_pulse_params(lambda, phi2, theta2, phi3);
  const auto [r1, r2] = ion_constraint_residuals(p);
  std::cout << "phi0 " << fmt("%.17g", p.phi0) << '\n'
            << "phi1 " << fmt("%.17g", p.phi1) << '\n'
            << "phi2 " << fmt("%.17g", p.phi2) << '\n'
            << "phi3 " << fmt("%.17g", p.phi3) << '\n'
            << "theta1 " << fmt("%.17g", p.theta1) << '\n'
            << "theta2 " << fmt("%.17g", p.theta2) << '\n'
            << "residual_phi " << fmt("%.3e", r1) << '\n'
            << "residual_theta " << fmt("%.3e", r2) << '\n'
            << "angle " << fmt("%.17g", ion_gate_angle(p)) << '\n';
  return kOk;
}

int run_classify(const std::string &op_text, unsigned spins) {
  const PauliPolynomial op = parse_operator(op_text, spins);
  const CoherenceProfile prof = coherence_orders(op);
  std::cout << "orders {";
  bool first = true;
  for (int p : prof.orders) {
    std::cout << (first ? "" : ", ") << p;
    first = false;
  }
  std::cout << "}\n";
  for (const auto &[p, w] : prof.component_weights) {
    std::cout << "weight " << p << ' ' << fmt("%.12g", w) << '\n';
  }
  std::cout << "subspace " << to_string(classify_subspace(op)) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Compile diagonal and controlled unitaries to RX/RY/RZ/ZZ gate sequences"};
  app.require_subcommand(1);

  Source compile_src;
  std::string compile_out;
  auto *compile = app.add_subcommand("compile", "compile a target to a gate sequence");
  compile_src.add_options(compile);
  compile->add_option("-o,--output", compile_out, "sequence file (stdout if omitted)");

  Source verify_src;
  verify_src.max_qubits = kDefaultSimulatorCap;
  std::string verify_seq;
  double verify_tol = kDefaultVerifyTolerance;
  auto *verify = app.add_subcommand("verify", "check a sequence against a dense reference");
  verify->add_option("sequence", verify_seq, "gate-sequence text file")->required();
  verify_src.add_options(verify);
  verify->add_option("--tol", verify_tol, "max-entry distance tolerance")
      ->capture_default_str();

  std::string graph_file;
  std::vector<unsigned> pair;
  double tau = 1e-3;
  std::string schedule_out;
  auto *schedule = app.add_subcommand("schedule", "nested spin-echo schedule for one coupling");
  schedule->add_option("--graph", graph_file, "coupling-graph JSON file")->required();
  schedule->add_option("--pair", pair, "active spins k l (1-based)")
      ->required()
      ->expected(2);
  schedule->add_option("--tau", tau, "SE1 period in seconds")->capture_default_str();
  schedule->add_option("-o,--output", schedule_out, "schedule file (stdout if omitted)");

  double lambda = 0.0;
  double phi2 = 0.0;
  double theta2 = 0.0;
  double phi3 = 0.0;
  auto *ion = app.add_subcommand("ion", "laser phases for the trapped-ion ZZ gate");
  ion->add_option("--lambda", lambda, "ZZ angle in radians")->required();
  ion->add_option("--phi2", phi2)->capture_default_str();
  ion->add_option("--theta2", theta2)->capture_default_str();
  ion->add_option("--phi3", phi3)->capture_default_str();

  std::string op_text;
  unsigned spins = 0;
  auto *classify = app.add_subcommand("classify", "coherence orders of an operator");
  classify->add_option("operator", op_text, "e.g. \"2 I1x I2x\"")->required();
  classify->add_option("--spins", spins, "spin count (default: highest index)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*compile) return run_compile(compile_src, compile_out);
    if (*verify) return run_verify(verify_src, verify_seq, verify_tol);
    if (*schedule) return run_schedule(graph_file, pair, tau, schedule_out);
    if (*ion) return run_ion(lambda, phi2, theta2, phi3);
    if (*classify) return run_classify(op_text, spins);
  } catch (const ParseError &e) {
    std::cerr << e.what() << '\n';
    return kParse;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSemantic;
  }
  return kSemantic;
}

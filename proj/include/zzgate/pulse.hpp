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
 * Physical realisations of the ZZ gate.
 *
 * Weak-coupling spin Hamiltonian
 *   H0 = sum_k Omega_k I_kz + sum_{k<l} pi J_kl 2 I_kz I_lz
 * with Omega in rad/s and J in Hz. Ideal 180 degree pulses are sign flips
 * of I_z in the toggling frame, so a schedule is a list of segments each
 * carrying a sign vector, and its average Hamiltonian is an exact sum.
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zzgate/diag_synth.hpp"
#include "zzgate/gate.hpp"

namespace zzgate {

class CouplingGraph {
 public:
  explicit CouplingGraph(unsigned n_spins);
  CouplingGraph(unsigned n_spins, std::vector<double> shifts);

  unsigned n_spins() const { return n_spins_; }
  const std::vector<double> &shifts() const { return shifts_; }
  double shift(unsigned spin) const { return shifts_.at(spin); }

  /** Symmetric; keys are stored with i < j. */
  const std::map<std::pair<unsigned, unsigned>, double> &couplings() const {
    return couplings_;
  }

  void set_shift(unsigned spin, double omega);
  /** J = 0 removes the edge. */
  void set_coupling(unsigned i, unsigned j, double hz);
  double coupling(unsigned i, unsigned j) const;
  bool coupled(unsigned i, unsigned j) const { return coupling(i, j) != 0.0; }

 private:
  void check_spin(unsigned s) const;

  unsigned n_spins_;
  std::vector<double> shifts_;
  std::map<std::pair<unsigned, unsigned>, double> couplings_;
};

/**
 * Spins other than the active pair, partitioned for nested echoes.
 * `echo_partners` is flipped together with the pair in the innermost echo;
 * none of them couple to the pair or to each other. Each entry of `groups`
 * is an uncoupled set refocused by one extra nesting level.
 */
struct SpinGroups {
  std::vector<unsigned> echo_partners;
  std::vector<std::vector<unsigned>> groups;
};

/** Greedy, ascending spin order. Throws std::invalid_argument if k and l are
 *  not coupled. */
SpinGroups group_spins(const CouplingGraph &g, unsigned k, unsigned l);

class PulseSchedule {
 public:
  struct Segment {
    double duration;
    std::vector<std::int8_t> signs;  // +1 or -1 per spin
  };

  /** Checks durations > 0, sign entries +-1 and an all +1 first segment. */
  PulseSchedule(unsigned n_spins, std::vector<Segment> segments);

  unsigned n_spins() const { return n_spins_; }
  const std::vector<Segment> &segments() const { return segments_; }
  double total_duration() const;

  /**
   * Spins receiving a 180 degree pulse before segment i (i >= 1) and,
   * at index size(), the closing pulse that returns every spin to +1.
   * Entry 0 is always empty.
   */
  std::vector<std::vector<unsigned>> pulse_events() const;

  /** Number of pulses each spin receives, closing pulse included. Always
   *  even. */
  std::vector<unsigned> pulse_counts() const;

 private:
  unsigned n_spins_;
  std::vector<Segment> segments_;
};

/**
 * Nested spin echo that keeps only the k-l coupling. The innermost unit is
 * [tau/2 | flip pair+partners | tau/2 | flip back]; each group adds a level
 * SE' = SE, flip(G), SE, SE, flip(G), SE. Total duration 4^{levels} tau.
 */
PulseSchedule build_refocus_schedule(
    const CouplingGraph &g, unsigned k, unsigned l, double tau);

/**
 * Time integral of the toggled Hamiltonian: RZ-like coefficients
 * Omega_i sum(dur s_i) and pair coefficients pi J_ij sum(dur s_i s_j) of
 * 2 I_iz I_jz. Exact because all toggled terms commute.
 */
ZPolynomial average_hamiltonian(const PulseSchedule &s, const CouplingGraph &g);

/** "SEGMENT <seconds>" / "PULSE180 <spins>" lines, 1-based spins. */
std::string to_text(const PulseSchedule &s);

/**
 * Swap chain along path k, r, ..., t, m. For every hop (a, b) except the
 * final (t, m) one emits exp(-i pi/2 2 I_ax I_bx) then
 * exp(-i pi/2 2 I_ay I_by), each as a ZZ gate in a rotated frame. The
 * sequence U satisfies U (2 I_kz I_mz) U^dagger = 2 I_tz I_mz.
 */
GateSequence relay_sequence(const CouplingGraph &g, const std::vector<unsigned> &path);

/** exp(-i angle 2 I_kz I_mz) for the path endpoints: relay, ZZ(t, m),
 *  relay inverse. */
GateSequence relay_zz(
    const CouplingGraph &g, const std::vector<unsigned> &path, double angle);

/** Laser phases of the six-pulse trapped-ion ZZ gate. */
struct IonPulseParams {
  double phi0 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/** Reduce to (-pi, pi]. */
double wrap_phase(double angle);

/**
 * phi1 - phi2 = pi - angle/2, phi0 - phi3 = pi + 2(phi1 - phi2),
 * theta1 - theta2 = pi + 4(phi1 - phi2). The free phases default to 0 and
 * every output is wrapped to (-pi, pi].
 */
IonPulseParams ion_pulse_params(
    double angle, double phi2 = 0.0, double theta2 = 0.0, double phi3 = 0.0);

/** Wrapped residuals of the two phase relations; both zero for valid
 *  params. */
std::pair<double, double> ion_constraint_residuals(const IonPulseParams &p);

/** The ZZ angle realised by the params, 2pi - 2(phi1 - phi2), in
 *  (-2pi, 2pi]. */
double ion_gate_angle(const IonPulseParams &p);

}  // namespace zzgate

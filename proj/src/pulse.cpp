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

#include "zzgate/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zzgate/errors.hpp"

namespace zzgate {

CouplingGraph::CouplingGraph(unsigned n_spins)
    : CouplingGraph(n_spins, std::vector<double>(n_spins, 0.0)) {}

CouplingGraph::CouplingGraph(unsigned n_spins, std::vector<double> shifts)
    : n_spins_(n_spins), shifts_(std::move(shifts)) {
  if (n_spins == 0) throw std::invalid_argument("graph needs at least one spin");
  if (shifts_.size() != n_spins) {
    throw DimensionMismatch("one chemical shift per spin expected");
  }
}

void CouplingGraph::check_spin(unsigned s) const {
  if (s >= n_spins_) {
    throw std::out_of_range(
        "spin " + std::to_string(s) + " out of range for " +
        std::to_string(n_spins_) + " spins");
  }
}

void CouplingGraph::set_shift(unsigned spin, double omega) {
  check_spin(spin);
  shifts_[spin] = omega;
}

void CouplingGraph::set_coupling(unsigned i, unsigned j, double hz) {
  check_spin(i);
  check_spin(j);
  if (i == j) throw std::invalid_argument("self-coupling is not allowed");
  const auto key = std::minmax(i, j);
  if (hz == 0.0) {
    couplings_.erase(key);
  } else {
    couplings_[key] = hz;
  }
}

double CouplingGraph::coupling(unsigned i, unsigned j) const {
  check_spin(i);
  check_spin(j);
  if (i == j) return 0.0;
  auto it = couplings_.find(std::minmax(i, j));
  return it == couplings_.end() ? 0.0 : it->second;
}

SpinGroups group_spins(const CouplingGraph &g, unsigned k, unsigned l) {
  if (k == l) throw std::invalid_argument("active pair needs two spins");
  if (!g.coupled(k, l)) {
    throw std::invalid_argument(
        "spins " + std::to_string(k + 1) + " and " + std::to_string(l + 1) +
        " are not coupled");
  }
  auto independent_of = [&](unsigned s, const std::vector<unsigned> &set) {
    return std::none_of(set.begin(), set.end(), [&](unsigned t) {
      return g.coupled(s, t);
    });
  };

  SpinGroups out;
  std::vector<unsigned> rest;
  for (unsigned s = 0; s < g.n_spins(); ++s) {
    if (s == k || s == l) continue;
    if (!g.coupled(s, k) && !g.coupled(s, l) &&
        independent_of(s, out.echo_partners)) {
      out.echo_partners.push_back(s);
    } else {
      rest.push_back(s);
    }
  }
  for (unsigned s : rest) {
    auto it = std::find_if(out.groups.begin(), out.groups.end(), [&](const auto &grp) {
      return independent_of(s, grp);
    });
    if (it == out.groups.end()) {
      out.groups.push_back({s});
    } else {
      it->push_back(s);
    }
  }
  return out;
}

PulseSchedule::PulseSchedule(unsigned n_spins, std::vector<Segment> segments)
    : n_spins_(n_spins), segments_(std::move(segments)) {
  if (segments_.empty()) throw std::invalid_argument("schedule has no segments");
  for (const auto &seg : segments_) {
    if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
      throw std::invalid_argument("segment durations must be positive");
    }
    if (seg.signs.size() != n_spins_) {
      throw DimensionMismatch("segment sign vector length");
    }
    for (auto s : seg.signs) {
      if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");
    }
  }
  const auto &first = segments_.front().signs;
  if (std::any_of(first.begin(), first.end(), [](auto s) { return s != 1; })) {
    throw std::invalid_argument("schedule must start in the +1 frame");
  }
}

double PulseSchedule::total_duration() const {
  double t = 0.0;
  for (const auto &seg : segments_) t += seg.duration;
  return t;
}

std::vector<std::vector<unsigned>> PulseSchedule::pulse_events() const {
  std::vector<std::vector<unsigned>> events(segments_.size() + 1);
  for (std::size_t i = 1; i <= segments_.size(); ++i) {
    const auto &prev = segments_[i - 1].signs;
    for (unsigned s = 0; s < n_spins_; ++s) {
      const int next = i < segments_.size() ? segments_[i].signs[s] : 1;
      if (prev[s] != next) events[i].push_back(s);
    }
  }
  return events;
}

std::vector<unsigned> PulseSchedule::pulse_counts() const {
  std::vector<unsigned> counts(n_spins_, 0);
  for (const auto &ev : pulse_events()) {
    for (unsigned s : ev) ++counts[s];
  }
  return counts;
}

PulseSchedule build_refocus_schedule(
    const CouplingGraph &g, unsigned k, unsigned l, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("echo period must be positive");
  }
  const SpinGroups groups = group_spins(g, k, l);
  const unsigned n = g.n_spins();

  using Segment = PulseSchedule::Segment;
  std::vector<Segment> unit(2, Segment{tau / 2, std::vector<std::int8_t>(n, 1)});
  unit[1].signs[k] = -1;
  unit[1].signs[l] = -1;
  for (unsigned s : groups.echo_partners) unit[1].signs[s] = -1;

  for (const auto &grp : groups.groups) {
    std::vector<Segment> flipped = unit;
    for (auto &seg : flipped) {
      for (unsigned s : grp) seg.signs[s] = static_cast<std::int8_t>(-seg.signs[s]);
    }
    std::vector<Segment> next;
    next.reserve(unit.size() * 4);
    for (const auto *part : {&unit, &flipped, &flipped, &unit}) {
      next.insert(next.end(), part->begin(), part->end());
    }
    unit = std::move(next);
  }
  return PulseSchedule(n, std::move(unit));
}

ZPolynomial average_hamiltonian(const PulseSchedule &s, const CouplingGraph &g) {
  if (s.n_spins() != g.n_spins()) {
    throw DimensionMismatch("schedule and graph spin counts differ");
  }
  const unsigned n = g.n_spins();
  ZPolynomial out(n);
  for (unsigned i = 0; i < n; ++i) {
    if (g.shift(i) == 0.0) continue;
    double weight = 0.0;
    for (const auto &seg : s.segments()) weight += seg.duration * seg.signs[i];
    out.add({i}, g.shift(i) * weight);
  }
  for (const auto &[key, hz] : g.couplings()) {
    const auto [i, j] = key;
    double weight = 0.0;
    for (const auto &seg : s.segments()) {
      weight += seg.duration * seg.signs[i] * seg.signs[j];
    }
    out.add({i, j}, kPi * hz * weight);
  }
  return out;
}

std::string to_text(const PulseSchedule &s) {
  std::ostringstream os;
  const auto events = s.pulse_events();
  auto emit_pulse = [&](const std::vector<unsigned> &spins) {
    if (spins.empty()) return;
    os << "PULSE180";
    for (unsigned sp : spins) os << ' ' << sp + 1;
    os << '\n';
  };
  char buf[32];
  for (std::size_t i = 0; i < s.segments().size(); ++i) {
    emit_pulse(events[i]);
    std::snprintf(buf, sizeof buf, "%.17g", s.segments()[i].duration);
    os << "SEGMENT " << buf << '\n';
  }
  emit_pulse(events.back());
  return os.str();
}

namespace {

void check_path(const CouplingGraph &g, const std::vector<unsigned> &path) {
  if (path.size() < 2) throw std::invalid_argument("relay path needs two spins");
  std::set<unsigned> seen;
  for (unsigned s : path) {
    if (s >= g.n_spins()) throw std::out_of_range("relay path spin out of range");
    if (!seen.insert(s).second) {
      throw std::invalid_argument("relay path repeats a spin");
    }
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.coupled(path[i], path[i + 1])) {
      throw std::invalid_argument(
          "broken relay path: spins " + std::to_string(path[i] + 1) + " and " +
          std::to_string(path[i + 1] + 1) + " are not coupled");
    }
  }
}

}  // namespace

GateSequence relay_sequence(const CouplingGraph &g, const std::vector<unsigned> &path) {
  check_path(g, path);
  GateSequence seq(g.n_spins());
  const double h = kPi / 2;
  for (std::size_t i = 0; i + 2 < path.size(); ++i) {
    const unsigned a = path[i];
    const unsigned b = path[i + 1];
    // exp(-i h 2 I_ax I_bx): RY(pi/2) maps I_z to I_x.
    seq.push_back(Gate::ry(a, -h));
    seq.push_back(Gate::ry(b, -h));
    seq.push_back(Gate::zz(a, b, h));
    seq.push_back(Gate::ry(a, h));
    seq.push_back(Gate::ry(b, h));
    // exp(-i h 2 I_ay I_by): RX(-pi/2) maps I_z to I_y.
    seq.push_back(Gate::rx(a, h));
    seq.push_back(Gate::rx(b, h));
    seq.push_back(Gate::zz(a, b, h));
    seq.push_back(Gate::rx(a, -h));
    seq.push_back(Gate::rx(b, -h));
  }
  return seq;
}

GateSequence relay_zz(
    const CouplingGraph &g, const std::vector<unsigned> &path, double angle) {
  const GateSequence relay = relay_sequence(g, path);
  GateSequence seq = relay;
  seq.push_back(Gate::zz(path[path.size() - 2], path.back(), angle));
  seq.append(relay.inverse());
  return seq;
}

double wrap_phase(double angle) {
  double r = std::remainder(angle, 2 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2 * kPi;
  return r;
}

IonPulseParams ion_pulse_params(double angle, double phi2, double theta2, double phi3) {
  if (!std::isfinite(angle)) throw std::invalid_argument("angle must be finite");
  const double diff = kPi - angle / 2;
  IonPulseParams p;
  p.phi2 = wrap_phase(phi2);
  p.theta2 = wrap_phase(theta2);
  p.phi3 = wrap_phase(phi3);
  p.phi1 = wrap_phase(p.phi2 + diff);
  p.phi0 = wrap_phase(p.phi3 + kPi + 2 * diff);
  p.theta1 = wrap_phase(p.theta2 + kPi + 4 * diff);
  return p;
}

std::pair<double, double> ion_constraint_residuals(const IonPulseParams &p) {
  const double d = p.phi1 - p.phi2;
  return {
      wrap_phase(p.phi0 - p.phi3 - kPi - 2 * d),
      wrap_phase(p.theta1 - p.theta2 - kPi - 4 * d)};
}

double ion_gate_angle(const IonPulseParams &p) {
  return normalize_angle(2 * kPi - 2 * (p.phi1 - p.phi2));
}

}  // namespace zzgate

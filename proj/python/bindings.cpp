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


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zzgate/coherence.hpp"
#include "zzgate/diag_synth.hpp"
#include "zzgate/errors.hpp"
#include "zzgate/gate.hpp"
#include "zzgate/gate_compiler.hpp"
#include "zzgate/pauli.hpp"
#include "zzgate/pulse.hpp"
#include "zzgate/simulator.hpp"

namespace py = pybind11;
using namespace zzgate;

namespace {

U2Matrix as_u2(const Eigen::Matrix2cd &m) { return U2Matrix(m); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ZZ-interaction gate compiler and pulse tools";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotUnitary>(m, "NotUnitary", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);

  py::enum_<GateKind>(m, "GateKind")
      .value("RX", GateKind::RX)
      .value("RY", GateKind::RY)
      .value("RZ", GateKind::RZ)
      .value("ZZ", GateKind::ZZ)
      .value("GPHASE", GateKind::GPhase);

  py::class_<Gate>(m, "Gate")
      .def_static("rx", &Gate::rx, py::arg("qubit"), py::arg("angle"))
      .def_static("ry", &Gate::ry, py::arg("qubit"), py::arg("angle"))
      .def_static("rz", &Gate::rz, py::arg("qubit"), py::arg("angle"))
      .def_static("zz", &Gate::zz, py::arg("first"), py::arg("second"), py::arg("angle"))
      .def_static("phase", &Gate::phase, py::arg("angle"))
      .def_property_readonly("kind", &Gate::kind)
      .def_property_readonly("qubit", &Gate::qubit)
      .def_property_readonly("second", &Gate::second)
      .def_property_readonly("angle", &Gate::angle)
      .def("inverse", &Gate::inverse)
      .def(py::self == py::self);

  py::class_<GateCounts>(m, "GateCounts")
      .def_readonly("zz", &GateCounts::zz)
      .def_readonly("one_qubit", &GateCounts::one_qubit)
      .def_readonly("phase", &GateCounts::phase)
      .def_property_readonly("total", &GateCounts::total);

  py::class_<GateSequence>(m, "GateSequence")
      .def(py::init<unsigned>(), py::arg("n_qubits"))
      .def_property_readonly("n_qubits", &GateSequence::n_qubits)
      .def_property_readonly("gates", &GateSequence::gates)
      .def("__len__", &GateSequence::size)
      .def("append", &GateSequence::push_back, py::arg("gate"))
      .def("extend", &GateSequence::append, py::arg("other"))
      .def("inverse", &GateSequence::inverse)
      .def("counts", [](const GateSequence &s) { return gate_counts(s); })
      .def("to_text", [](const GateSequence &s) { return to_text(s); })
      .def_static("from_text",
                  [](const std::string &text) { return parse_sequence_text(text); });

  py::class_<ZPolynomial>(m, "ZPolynomial")
      .def(py::init<unsigned, double>(), py::arg("n_qubits"), py::arg("constant") = 0.0)
      .def_property_readonly("n_qubits", &ZPolynomial::n_qubits)
      .def_property("constant", &ZPolynomial::constant, &ZPolynomial::set_constant)
      .def_property_readonly("terms",
                             [](const ZPolynomial &z) {
                               std::vector<std::pair<QubitSubset, double>> out(
                                   z.terms().begin(), z.terms().end());
                               return out;
                             })
      .def("coefficient", &ZPolynomial::coefficient, py::arg("qubits"))
      .def("add", &ZPolynomial::add, py::arg("qubits"), py::arg("coefficient"));

  m.def(
      "compile_diagonal",
      [](std::vector<double> phases) {
        unsigned n = 0;
        while ((std::size_t{1} << n) < phases.size()) ++n;
        return compile_diagonal(PhaseVector(n, std::move(phases)));
      },
      py::arg("phases"), "Sequence for diag(exp(-i phases)); length must be 2^n.");
  m.def(
      "phases_to_zpoly",
      [](std::vector<double> phases) {
        unsigned n = 0;
        while ((std::size_t{1} << n) < phases.size()) ++n;
        return phases_to_zpoly(PhaseVector(n, std::move(phases)));
      },
      py::arg("phases"));
  m.def(
      "zpoly_to_phases", [](const ZPolynomial &z) { return zpoly_to_phases(z).phases(); },
      py::arg("zpoly"));
  m.def("zpoly_to_sequence", &zpoly_to_sequence, py::arg("zpoly"));

  m.def(
      "decompose_u2",
      [](const Eigen::Matrix2cd &u) {
        const U2Params p = decompose_u2(as_u2(u));
        return py::dict(py::arg("alpha") = p.alpha, py::arg("beta") = p.beta,
                        py::arg("phi0") = p.phi0, py::arg("phi1") = p.phi1);
      },
      py::arg("u"));
  m.def(
      "compile_controlled_u",
      [](const Eigen::Matrix2cd &u, unsigned n) { return compile_controlled_u(as_u2(u), n); },
      py::arg("u"), py::arg("n_qubits"));
  m.def(
      "universal_gate_matrix",
      [](const Eigen::Matrix2cd &u, unsigned n) {
        return universal_gate_matrix(as_u2(u), n).matrix();
      },
      py::arg("u"), py::arg("n_qubits"));
  m.def("build_walsh_hadamard", &build_walsh_hadamard, py::arg("n_qubits"));
  m.def("compile_conditional_phase", &compile_conditional_phase, py::arg("n_qubits"),
        py::arg("marked"), py::arg("phase"));
  m.def("build_grover_iteration", &build_grover_iteration, py::arg("n_qubits"),
        py::arg("marked"));
  m.def(
      "compile_deutsch_jozsa",
      [](std::vector<int> values) {
        unsigned n = 0;
        while ((std::size_t{1} << n) < values.size()) ++n;
        return compile_deutsch_jozsa(TruthTable(n, std::move(values)));
      },
      py::arg("values"));

  m.def(
      "sequence_unitary",
      [](const GateSequence &s) { return sequence_unitary(s).matrix(); }, py::arg("sequence"));
  m.def(
      "apply_sequence",
      [](const GateSequence &s, Eigen::VectorXcd psi) {
        StateVector v(s.n_qubits(), std::move(psi));
        v.apply(s);
        return Eigen::VectorXcd(v.amplitudes());
      },
      py::arg("sequence"), py::arg("state"));
  m.def(
      "distance_up_to_phase",
      [](const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v) {
        unsigned n = 0;
        while ((Eigen::Index{1} << n) < u.rows()) ++n;
        return distance_up_to_phase(DenseUnitary(n, u), DenseUnitary(n, v));
      },
      py::arg("u"), py::arg("v"));
  m.def("simulate_grover", &simulate_grover, py::arg("n_qubits"), py::arg("marked"),
        py::arg("iterations"));

  m.def(
      "parse_operator",
      [](const std::string &text, unsigned n) { return to_string(parse_operator(text, n)); },
      py::arg("text"), py::arg("n_spins") = 0, "Canonical form of a product-operator sum.");
  m.def(
      "coherence_orders",
      [](const std::string &text, unsigned n) {
        const CoherenceProfile p = coherence_orders(parse_operator(text, n));
        return py::make_tuple(p.orders, p.component_weights);
      },
      py::arg("text"), py::arg("n_spins") = 0);
  m.def(
      "classify_subspace",
      [](const std::string &text, unsigned n) {
        return to_string(classify_subspace(parse_operator(text, n)));
      },
      py::arg("text"), py::arg("n_spins") = 0);

  py::class_<CouplingGraph>(m, "CouplingGraph")
      .def(py::init<unsigned>(), py::arg("n_spins"))
      .def(py::init<unsigned, std::vector<double>>(), py::arg("n_spins"), py::arg("shifts"))
      .def_property_readonly("n_spins", &CouplingGraph::n_spins)
      .def("set_shift", &CouplingGraph::set_shift, py::arg("spin"), py::arg("omega"))
      .def("set_coupling", &CouplingGraph::set_coupling, py::arg("i"), py::arg("j"),
           py::arg("hz"))
      .def("coupling", &CouplingGraph::coupling, py::arg("i"), py::arg("j"));

  py::class_<PulseSchedule>(m, "PulseSchedule")
      .def_property_readonly("total_duration", &PulseSchedule::total_duration)
      .def_property_readonly("n_segments",
                             [](const PulseSchedule &s) { return s.segments().size(); })
      .def("pulse_counts", &PulseSchedule::pulse_counts)
      .def("to_text", [](const PulseSchedule &s) { return to_text(s); });

  m.def("build_refocus_schedule", &build_refocus_schedule, py::arg("graph"), py::arg("k"),
        py::arg("l"), py::arg("tau"));
  m.def("average_hamiltonian", &average_hamiltonian, py::arg("schedule"), py::arg("graph"));
  m.def("relay_zz", &relay_zz, py::arg("graph"), py::arg("path"), py::arg("angle"));

  m.def(
      "ion_pulse_params",
      [](double angle, double phi2, double theta2, double phi3) {
        const IonPulseParams p = ion_pulse_params(angle, phi2, theta2, phi3);
        return py::dict(py::arg("phi0") = p.phi0, py::arg("phi1") = p.phi1,
                        py::arg("phi2") = p.phi2, py::arg("phi3") = p.phi3,
                        py::arg("theta1") = p.theta1, py::arg("theta2") = p.theta2);
      },
      py::arg("angle"), py::arg("phi2") = 0.0, py::arg("theta2") = 0.0, py::arg("phi3") = 0.0);
}

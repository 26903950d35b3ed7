// Copyright 2026 The gcelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <optional>
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcelab/concentration.hpp"
#include "gcelab/conjecture_lab.hpp"
#include "gcelab/errors.hpp"
#include "gcelab/gce_oracle.hpp"
#include "gcelab/io.hpp"
#include "gcelab/permutation_test.hpp"
#include "gcelab/qubit_compiler.hpp"
#include "gcelab/robustness.hpp"
#include "gcelab/states.hpp"

namespace py = pybind11;
using namespace gcelab;

namespace {

SubsetLabel subset_or_all(const std::optional<std::vector<int>>& s, int n) {
  return s ? SubsetLabel::from_unsorted(*s) : SubsetLabel::all(n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized concentratable entanglement: oracle, permutation-test estimator and experiments";

  py::register_exception<UnsupportedOrderError>(m, "UnsupportedOrderError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_MemoryError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegenerateOutcomeError>(m, "DegenerateOutcomeError", PyExc_ArithmeticError);

  py::class_<PureState>(m, "PureState")
      .def(py::init<int, CVector>(), py::arg("num_qubits"), py::arg("amplitudes"))
      .def_static("normalized", &PureState::normalized, py::arg("num_qubits"), py::arg("amplitudes"))
      .def_property_readonly("num_qubits", &PureState::num_qubits)
      .def_property_readonly("amplitudes", &PureState::amplitudes)
      .def("inner", &PureState::inner)
      .def("tensor", &PureState::tensor)
      .def("to_json", [](const PureState& s) { return statevector_to_json(s); })
      .def_static("from_json", &parse_statevector_json, py::arg("text"))
      .def("__repr__", [](const PureState& s) { return "<PureState n=" + std::to_string(s.num_qubits()) + ">"; });

  m.def("ghz_state", &ghz_state, py::arg("n"));
  m.def("w_state", &w_state, py::arg("n"));
  m.def("spin_squeezed_state", &spin_squeezed_state, py::arg("n"), py::arg("mu"));
  m.def("haar_random_state", py::overload_cast<int, std::uint64_t>(&haar_random_state), py::arg("n"),
        py::arg("seed"));
  m.def("random_product_state", &random_product_state, py::arg("n"), py::arg("seed"));
  m.def("perturb_state", py::overload_cast<const PureState&, double, std::uint64_t>(&perturb_state),
        py::arg("psi"), py::arg("epsilon"), py::arg("seed"));
  m.def("trace_distance_pure", &trace_distance_pure);
  m.def("reduced_density_matrix",
        [](const PureState& psi, const std::vector<int>& keep) {
          return partial_trace(psi, SubsetLabel::from_unsorted(keep)).matrix();
        },
        py::arg("psi"), py::arg("keep"));

  m.def("gce",
        [](const PureState& psi, double order, const std::optional<std::vector<int>>& s) {
          return gce(psi, GceParams(order, subset_or_all(s, psi.num_qubits())));
        },
        py::arg("psi"), py::arg("order"), py::arg("subset") = py::none());
  m.def("subset_trace_power",
        [](const PureState& psi, const std::vector<int>& alpha, double order) {
          return subset_trace_power(psi, SubsetLabel::from_unsorted(alpha), order);
        },
        py::arg("psi"), py::arg("alpha"), py::arg("order"));
  m.def("gce_ghz_closed_form", &gce_ghz_closed_form, py::arg("n"), py::arg("subset_size"), py::arg("order"));
  m.def("gce_w_closed_form", &gce_w_closed_form, py::arg("n"), py::arg("subset_size"), py::arg("order"));
  m.def("gce_spin_squeezed",
        [](int n, double mu, int subset_size, double order) {
          return gce_spin_squeezed(SqueezingParams(n, mu), subset_size, order);
        },
        py::arg("n"), py::arg("mu"), py::arg("subset_size"), py::arg("order"));

  py::class_<ProbabilityTable>(m, "ProbabilityTable")
      .def_property_readonly("radix", &ProbabilityTable::radix)
      .def_property_readonly("num_labels", &ProbabilityTable::num_labels)
      .def("as_dict",
           [](const ProbabilityTable& t) {
             py::dict d;
             for (const auto& e : t.entries()) d[py::str(e.digits.to_string())] = e.probability;
             return d;
           })
      .def("residue_mass",
           [](const ProbabilityTable& t, const std::vector<int>& alpha, int residue) {
             return t.residue_mass(SubsetLabel::from_unsorted(alpha), residue);
           })
      .def("off_support_mass", &ProbabilityTable::off_support_mass)
      .def("to_csv",
           [](const ProbabilityTable& t) {
             std::ostringstream out;
             t.write_csv(out);
             return out.str();
           })
      .def_static("from_csv", [](const std::string& text, int radix) {
        std::istringstream in(text);
        return ProbabilityTable::read_csv(in, radix);
      });

  m.def("is_prime", &is_prime);
  m.def("exact_probability_table",
        [](const PureState& psi, int copies, bool include_off_support) {
          TableOptions o;
          o.include_off_support = include_off_support;
          return exact_probability_table(psi, copies, o);
        },
        py::arg("psi"), py::arg("copies"), py::arg("include_off_support") = false);
  m.def("exact_probability_table_distinct",
        [](const std::vector<PureState>& copies) { return exact_probability_table(std::span<const PureState>(copies)); },
        py::arg("copies"));
  m.def("sample_table", &sample_table, py::arg("table"), py::arg("shots"), py::arg("seed"));
  m.def("estimate_gce",
        [](const ProbabilityTable& t, const std::optional<std::vector<int>>& s) {
          const auto e = estimate_gce(t, GceParams(t.radix(), subset_or_all(s, t.num_labels())));
          return std::make_pair(e.from_zero_residue, e.from_nonzero_residue);
        },
        py::arg("table"), py::arg("subset") = py::none(),
        "Returns (zero-residue estimate, nonzero-residue estimate).");
  m.def("total_variation", &total_variation);

  m.def("compile_circuit", [](int n, int copies) { return serialize_gatelist(compile_circuit(n, copies)); },
        py::arg("n"), py::arg("copies"), "Gate list text for the qubit-only circuit.");
  m.def("simulate_circuit",
        [](const std::string& text, const PureState& psi) { return simulate_gatelist(parse_gatelist(text), psi); },
        py::arg("gatelist"), py::arg("psi"));

  m.def("concentrate_random",
        [](std::uint64_t seed, double min_probability) {
          Rng rng(seed);
          py::list out;
          for (const auto& r : concentrate(ConcentrationInput::random(rng), min_probability)) {
            py::dict d;
            d["outcome"] = r.outcome;
            d["probability"] = r.probability;
            d["fidelity_before"] = r.fidelity_before;
            d["fidelity_after"] = r.fidelity_after;
            d["theta"] = r.theta;
            d["lambda"] = r.lambda;
            out.append(d);
          }
          return out;
        },
        py::arg("seed"), py::arg("min_probability") = 1e-12);

  m.def("error_bound", [](const std::vector<double>& eps, int copies, int subset_size) {
    return error_bound(eps, copies, subset_size);
  });
  m.def("measured_error",
        [](const PureState& psi, const std::vector<double>& eps, std::uint64_t seed, const std::vector<int>& s) {
          const auto r = measured_error(psi, NoiseSpec{eps, seed},
                                        GceParams(static_cast<double>(eps.size()), SubsetLabel::from_unsorted(s)));
          return std::make_pair(r.measured_error, r.bound);
        },
        py::arg("psi"), py::arg("epsilons"), py::arg("seed"), py::arg("subset"),
        "Returns (measured error, bound); K is the number of epsilons.");

  m.def("q_of_z", [](const PureState& psi, const std::vector<int>& z, int order) { return q_of_z(psi, z, order); },
        py::arg("psi"), py::arg("z"), py::arg("order"));
  m.def("nsssa_sum",
        [](const PureState& psi, const std::vector<int>& a, int b, const std::vector<int>& c, double order) {
          return nsssa_sum(psi, SubsetLabel::from_unsorted(a), b, SubsetLabel::from_unsorted(c), order);
        },
        py::arg("psi"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("order"));
}

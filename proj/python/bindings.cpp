// Copyright 2026 The bcqe Authors
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
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcqe/cqe.hpp"
#include "bcqe/error.hpp"
#include "bcqe/reference.hpp"

namespace py = pybind11;
using namespace bcqe;

namespace {

py::array_t<cplx> to_array(const ComplexTensor4& t) {
  const auto r = static_cast<py::ssize_t>(t.dim());
  py::array_t<cplx> out({r, r, r, r});
  std::copy(t.data().begin(), t.data().end(), out.mutable_data());
  return out;
}

py::array_t<double> to_array(const RealTensor4& t) {
  const auto r = static_cast<py::ssize_t>(t.dim());
  py::array_t<double> out({r, r, r, r});
  std::copy(t.data().begin(), t.data().end(), out.mutable_data());
  return out;
}

ReducedHamiltonian hamiltonian(const ModelSpec& spec, std::optional<double> gamma) {
  return gamma ? reduced_hamiltonian(spec, *gamma) : reduced_hamiltonian(spec);
}

}  // namespace

PYBIND11_MODULE(_bcqe, m) {
  m.doc() = "Contracted quantum eigensolver for coupled bosonic oscillators";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UnboundSystemError>(m, "UnboundSystemError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<IndexError>(m, "IndexError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NumericalConsistencyError>(m, "NumericalConsistencyError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::class_<ModelSpec>(m, "ModelSpec")
      .def(py::init([](int n, double z, int r) { return ModelSpec{n, z, r}; }), py::arg("n_bosons") = 2,
           py::arg("force_constant") = 10.0, py::arg("n_orbitals") = 2)
      .def_readwrite("n_bosons", &ModelSpec::n_bosons)
      .def_readwrite("force_constant", &ModelSpec::force_constant)
      .def_readwrite("n_orbitals", &ModelSpec::n_orbitals)
      .def("__repr__", [](const ModelSpec& s) {
        return "ModelSpec(n_bosons=" + std::to_string(s.n_bosons) + ", force_constant=" +
               py::repr(py::float_(s.force_constant)).cast<std::string>() + ", n_orbitals=" +
               std::to_string(s.n_orbitals) + ")";
      });

  m.def("exact_energy", &exact_energy, py::arg("spec"));
  m.def("mean_field_energy", &mean_field_energy, py::arg("spec"));
  m.def("normal_mode_constants", &normal_mode_constants, py::arg("spec"));
  m.def("gamma", [](const ModelSpec& s) { return gamma_scaling(s).gamma; }, py::arg("spec"));
  m.def(
      "reduced_hamiltonian",
      [](const ModelSpec& s, std::optional<double> g) { return to_array(hamiltonian(s, g).elements); },
      py::arg("spec"), py::arg("gamma") = py::none(), "2K as an (R, R, R, R) array");

  m.def(
      "full_ci",
      [](const ModelSpec& s, std::optional<double> g) {
        const SpectrumResult r = full_ci(hamiltonian(s, g));
        py::dict out;
        out["eigenvalues"] = r.eigenvalues;
        out["occupations"] = natural_occupations(r);
        return out;
      },
      py::arg("spec"), py::arg("gamma") = py::none());
  m.def(
      "product_basis_eigenvalues",
      [](const ModelSpec& s, std::optional<double> g) { return product_basis_ci(hamiltonian(s, g)).eigenvalues; },
      py::arg("spec"), py::arg("gamma") = py::none());

  py::class_<ShotConfig>(m, "ShotConfig")
      .def(py::init([](std::uint64_t shots, std::uint64_t seed) { return ShotConfig{shots, seed}; }),
           py::arg("shots") = 8192, py::arg("seed") = 0)
      .def_readwrite("shots", &ShotConfig::shots)
      .def_readwrite("seed", &ShotConfig::seed);

  py::class_<CQEConfig>(m, "CQEConfig")
      .def(py::init<>())
      .def_readwrite("epsilon", &CQEConfig::epsilon)
      .def_readwrite("max_iterations", &CQEConfig::max_iterations)
      .def_readwrite("energy_tol", &CQEConfig::energy_tol)
      .def_readwrite("residual_tol", &CQEConfig::residual_tol)
      .def_readwrite("shots", &CQEConfig::shots)
      .def_readwrite("noise_strength", &CQEConfig::noise_strength)
      .def_readwrite("noise_trajectories", &CQEConfig::noise_trajectories)
      .def_readwrite("noise_seed", &CQEConfig::noise_seed)
      .def_readwrite("calibration", &CQEConfig::calibration)
      .def_readwrite("initial", &CQEConfig::initial)
      .def_readwrite("symmetrize_initial", &CQEConfig::symmetrize_initial)
      .def_property(
          "encoding", [](const CQEConfig& c) { return std::string(to_string(c.encoding.kind)); },
          [](CQEConfig& c, const std::string& name) { c.encoding.kind = parse_encoding(name); })
      .def_readwrite("step_halving", &CQEConfig::step_halving)
      .def_readwrite("sufficient_decrease", &CQEConfig::sufficient_decrease)
      .def_readwrite("max_halvings", &CQEConfig::max_halvings)
      .def_readwrite("gamma", &CQEConfig::gamma);

  py::class_<IterationRecord>(m, "IterationRecord")
      .def_readonly("iteration", &IterationRecord::iteration)
      .def_readonly("energy", &IterationRecord::energy)
      .def_readonly("residual_norm", &IterationRecord::residual_norm)
      .def_readonly("err_vs_fci", &IterationRecord::err_vs_fci)
      .def_readonly("err_vs_exact", &IterationRecord::err_vs_exact)
      .def_readonly("wall_ms", &IterationRecord::wall_ms)
      .def_readonly("epsilon", &IterationRecord::epsilon);

  py::class_<CQEResult>(m, "CQEResult")
      .def_property_readonly("trace", [](const CQEResult& r) { return r.trace.records; })
      .def_property_readonly("rdm", [](const CQEResult& r) { return to_array(r.rdm.elements); })
      .def_readonly("energy", &CQEResult::energy)
      .def_readonly("converged", &CQEResult::converged)
      .def_readonly("stop_reason", &CQEResult::stop_reason)
      .def_readonly("fci_reference", &CQEResult::fci_reference)
      .def_readonly("exact_energy", &CQEResult::exact_energy)
      .def_readonly("gamma", &CQEResult::gamma)
      .def_readonly("warnings", &CQEResult::warnings)
      .def_property_readonly("iterations", &CQEResult::iterations)
      .def_property_readonly("final_state", [](const CQEResult& r) {
        const auto& a = r.final_state.amplitudes();
        py::array_t<cplx> out(static_cast<py::ssize_t>(a.size()));
        std::copy(a.begin(), a.end(), out.mutable_data());
        return out;
      });

  m.def(
      "run",
      [](const ModelSpec& spec, const CQEConfig& cfg) {
        py::gil_scoped_release release;
        return run(spec, cfg);
      },
      py::arg("spec"), py::arg("config") = CQEConfig{});
}

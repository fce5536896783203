// Copyright 2026 The symmax Authors
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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "symmax/basis.hpp"
#include "symmax/classical.hpp"
#include "symmax/cli/problem_file.hpp"
#include "symmax/cli/report.hpp"
#include "symmax/errors.hpp"
#include "symmax/quantum.hpp"
#include "symmax/version.hpp"

namespace py = pybind11;
using namespace symmax;

namespace {

std::vector<HermitianOperator> hermitian_list(const std::vector<ComplexMatrix>& matrices) {
  std::vector<HermitianOperator> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.emplace_back(m);
  return out;
}

std::optional<SymmetrySpec> make_symmetry(const std::optional<std::vector<ComplexMatrix>>& lie,
                                          const std::optional<std::vector<ComplexMatrix>>& finite_group) {
  if (lie && finite_group) throw DomainError("give either lie or finite_group generators, not both");
  if (lie) return LieSymmetry{hermitian_list(*lie)};
  if (finite_group) return FiniteGroupSymmetry(*finite_group);
  return std::nullopt;
}

OperatorBasis make_basis(const std::string& kind, std::size_t dim) {
  if (kind == "gell_mann") return gell_mann_basis(dim);
  if (kind == "two_qubit_paper") return two_qubit_paper_basis();
  throw LookupError("unknown basis kind '" + kind + "'");
}

py::list basis_to_list(const OperatorBasis& b) {
  py::list out;
  for (std::size_t k = 0; k < b.size(); ++k) out.append(py::make_tuple(b.labels[k], b.elements[k].matrix()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximum-entropy inference under symmetry constraints";
  m.attr("__version__") = kVersion;

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", error.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", error.ptr());
  py::register_exception<LookupError>(m, "LookupError", error.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::enum_<SolverStatus>(m, "SolverStatus")
      .value("CONVERGED", SolverStatus::Converged)
      .value("BOUNDARY", SolverStatus::Boundary)
      .value("INFEASIBLE", SolverStatus::Infeasible)
      .value("MAX_ITERATIONS", SolverStatus::MaxIterations)
      .def("__str__", [](SolverStatus s) { return std::string(to_string(s)); });

  py::class_<SolverOptions>(m, "SolverOptions")
      .def(py::init<>())
      .def(py::init([](double tol, std::size_t max_iterations, double multiplier_cap, std::uint64_t seed,
                       std::size_t restarts) {
             SolverOptions o;
             o.tol = tol;
             o.max_iterations = max_iterations;
             o.multiplier_cap = multiplier_cap;
             o.seed = seed;
             o.restarts = restarts;
             return o;
           }),
           py::kw_only(), py::arg("tol") = 1e-10, py::arg("max_iterations") = 10000,
           py::arg("multiplier_cap") = 1e3, py::arg("seed") = 0, py::arg("restarts") = 8)
      .def_readwrite("tol", &SolverOptions::tol)
      .def_readwrite("max_iterations", &SolverOptions::max_iterations)
      .def_readwrite("multiplier_cap", &SolverOptions::multiplier_cap)
      .def_readwrite("seed", &SolverOptions::seed)
      .def_readwrite("restarts", &SolverOptions::restarts);

  py::class_<SolverReport>(m, "QuantumSolution")
      .def_property_readonly("state", [](const SolverReport& r) { return r.state.matrix(); })
      .def_readonly("lambda_", &SolverReport::lambda)
      .def_readonly("gamma", &SolverReport::gamma)
      .def_readonly("labels", &SolverReport::labels)
      .def_readonly("log_partition", &SolverReport::log_partition)
      .def_readonly("entropy", &SolverReport::entropy)
      .def_readonly("residuals", &SolverReport::residuals)
      .def_readonly("invariance", &SolverReport::invariance)
      .def_readonly("iterations", &SolverReport::iterations)
      .def_readonly("status", &SolverReport::status)
      .def_readonly("solver", &SolverReport::solver)
      .def("__repr__", [](const SolverReport& r) {
        return "<QuantumSolution " + std::string(to_string(r.status)) + " entropy=" + std::to_string(r.entropy) + ">";
      });

  py::class_<ClassicalSolution>(m, "ClassicalSolution")
      .def_readonly("probabilities", &ClassicalSolution::probabilities)
      .def_readonly("orbit_probabilities", &ClassicalSolution::orbit_probabilities)
      .def_readonly("multipliers", &ClassicalSolution::multipliers)
      .def_readonly("log_partition", &ClassicalSolution::log_partition)
      .def_readonly("entropy", &ClassicalSolution::entropy)
      .def_readonly("residuals", &ClassicalSolution::residuals)
      .def_property_readonly("orbits", [](const ClassicalSolution& s) { return s.partition.orbits; })
      .def_readonly("iterations", &ClassicalSolution::iterations)
      .def_readonly("status", &ClassicalSolution::status)
      .def("__repr__", [](const ClassicalSolution& s) {
        return "<ClassicalSolution " + std::string(to_string(s.status)) + " entropy=" + std::to_string(s.entropy) +
               ">";
      });

  m.def(
      "solve_quantum",
      [](std::size_t dim, const std::vector<ComplexMatrix>& observables, const std::vector<double>& targets,
         const std::optional<std::vector<ComplexMatrix>>& lie,
         const std::optional<std::vector<ComplexMatrix>>& finite_group, const std::string& basis,
         const std::string& method, const SolverOptions& options) {
        QuantumProblem p;
        p.dim = dim;
        p.observables = hermitian_list(observables);
        p.targets = targets;
        p.symmetry = make_symmetry(lie, finite_group);
        p.basis = make_basis(basis, dim);
        if (method == "dual") return solve_dual(p, options);
        if (method == "delta") return solve_delta(p, options);
        throw LookupError("unknown method '" + method + "' (expected dual or delta)");
      },
      py::arg("dim"), py::arg("observables"), py::arg("targets"), py::kw_only(), py::arg("lie") = py::none(),
      py::arg("finite_group") = py::none(), py::arg("basis") = "gell_mann", py::arg("method") = "dual",
      py::arg("options") = SolverOptions{}, "Maximum-entropy density matrix matching the observable means.");

  m.def(
      "solve_classical",
      [](std::size_t outcomes, const std::vector<std::vector<double>>& observables, const std::vector<double>& targets,
         const std::vector<std::vector<std::vector<std::size_t>>>& permutations, const SolverOptions& options) {
        ClassicalProblem p;
        p.outcomes = outcomes;
        p.observables = observables;
        p.targets = targets;
        for (const auto& cycles : permutations) p.symmetry.push_back(Permutation::from_cycles(cycles, outcomes));
        return symmax::solve_classical(p, options);
      },
      py::arg("outcomes"), py::arg("observables"), py::arg("targets"), py::kw_only(),
      py::arg("permutations") = std::vector<std::vector<std::vector<std::size_t>>>{},
      py::arg("options") = SolverOptions{},
      "Maximum-entropy distribution; permutations are lists of 1-based cycles.");

  m.def(
      "solve_problem",
      [](const std::string& text, const std::string& method, const SolverOptions& options) {
        const cli::ProblemFile file = cli::parse_problem_text(text);
        const cli::ResolvedProblem problem = cli::resolve(file);
        const cli::ReportHeader header{"<memory>", cli::sha256_hex(text)};
        if (const auto* c = std::get_if<ClassicalProblem>(&problem)) {
          if (method != "dual") throw ParseError("", "method " + method + " applies to quantum problems only");
          return cli::dump(cli::classical_report(header, *c, symmax::solve_classical(*c, options), options));
        }
        const auto& q = std::get<QuantumProblem>(problem);
        const SolverReport r = method == "delta" ? solve_delta(q, options) : solve_dual(q, options);
        return cli::dump(cli::quantum_report(header, q, r, options));
      },
      py::arg("text"), py::kw_only(), py::arg("method") = "dual", py::arg("options") = SolverOptions{},
      "Solves a JSON problem document and returns the JSON report text.");

  m.def(
      "gibbs_state",
      [](const std::vector<ComplexMatrix>& operators, const std::vector<double>& multipliers) {
        const GibbsState g = symmax::gibbs_state(hermitian_list(operators), multipliers);
        return py::make_tuple(g.state.matrix(), g.log_partition);
      },
      py::arg("operators"), py::arg("multipliers"), "Returns (rho, ln Z) for rho = exp(sum theta_c C_c) / Z.");

  m.def(
      "entropy",
      [](const ComplexMatrix& rho) { return entropy_vn(DensityMatrix(rho)); }, py::arg("rho"),
      "von Neumann entropy in nats.");

  m.def(
      "invariance_residual",
      [](const ComplexMatrix& rho, const std::optional<std::vector<ComplexMatrix>>& lie,
         const std::optional<std::vector<ComplexMatrix>>& finite_group) {
        const auto spec = make_symmetry(lie, finite_group);
        if (!spec) throw DomainError("a symmetry is required");
        return symmax::invariance_residual(DensityMatrix(rho), *spec);
      },
      py::arg("rho"), py::kw_only(), py::arg("lie") = py::none(), py::arg("finite_group") = py::none());

  m.def(
      "expm_hermitian", [](const ComplexMatrix& h) { return symmax::expm_hermitian(HermitianOperator(h)).matrix(); },
      py::arg("h"));

  m.def(
      "named_operator",
      [](const std::string& name, std::size_t dim) { return named_matrix(name, dim); }, py::arg("name"),
      py::arg("dim"));

  m.def(
      "basis", [](const std::string& kind, std::size_t dim) { return basis_to_list(make_basis(kind, dim)); },
      py::arg("kind"), py::arg("dim"), "List of (label, matrix) pairs.");
}

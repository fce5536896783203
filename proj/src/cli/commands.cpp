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

#include "symmax/cli/commands.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "symmax/basis.hpp"
#include "symmax/cli/problem_file.hpp"
#include "symmax/cli/report.hpp"
#include "symmax/errors.hpp"

namespace symmax::cli {

namespace {

namespace fs = std::filesystem;

const char* kReset = "\033[0m";

const char* status_color(int code) {
  switch (code) {
    case kOk:
      return "\033[32m";
    case kNotConverged:
      return "\033[33m";
    default:
      return "\033[31m";
  }
}

std::string paint(const std::string& text, int code, Style style) {
  return style.color ? status_color(code) + text + kReset : text;
}

std::string short_number(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

struct Outcome {
  int code = kOk;
  std::string report;
  std::string summary;
};

Outcome solve_one(const std::string& path, const SolveSettings& settings, Style style) {
  const std::string name = fs::path(path).filename().string();
  Outcome o;
  try {
    const std::string text = read_file(path);
    const ProblemFile file = parse_problem_text(text);
    const ResolvedProblem problem = resolve(file);
    const ReportHeader header{name, sha256_hex(text)};
    nlohmann::ordered_json report;
    std::string status;
    double entropy = 0.0;
    std::size_t iterations = 0;
    if (const auto* c = std::get_if<ClassicalProblem>(&problem)) {
      if (settings.method != "dual") {
        throw ParseError("", "--solver " + settings.method + " applies to quantum problems only");
      }
      const ClassicalSolution s = solve_classical(*c, settings.solver);
      report = classical_report(header, *c, s, settings.solver);
      o.code = exit_code(s.status);
      status = std::string(to_string(s.status));
      entropy = s.entropy;
      iterations = s.iterations;
    } else {
      const auto& q = std::get<QuantumProblem>(problem);
      const SolverReport r = settings.method == "delta" ? solve_delta(q, settings.solver) : solve_dual(q, settings.solver);
      report = quantum_report(header, q, r, settings.solver);
      o.code = exit_code(r.status);
      status = std::string(to_string(r.status));
      entropy = r.entropy;
      iterations = r.iterations;
    }
    o.report = dump(report);
    o.summary = name + ": " + paint(status, o.code, style) + " (entropy " + short_number(entropy) + ", " +
                std::to_string(iterations) + " iterations)";
  } catch (const ParseError& e) {
    o.code = kInputError;
    o.summary = name + ": " + paint("error", kInputError, style) + ": " + e.what();
  } catch (const Error& e) {
    o.code = kInputError;
    o.summary = name + ": " + paint("error", kInputError, style) + ": " + e.what();
  }
  return o;
}

void write_text(const fs::path& target, const std::string& text) {
  std::ofstream f(target, std::ios::binary);
  if (!f) throw Error("cannot write '" + target.string() + "'");
  f << text;
}

}  // namespace

int exit_code(SolverStatus status) {
  switch (status) {
    case SolverStatus::Converged:
      return kOk;
    case SolverStatus::Boundary:
    case SolverStatus::MaxIterations:
      return kNotConverged;
    case SolverStatus::Infeasible:
      return kInfeasible;
  }
  return kInputError;
}

int worst_exit_code(int a, int b) {
  const auto rank = [](int code) {
    switch (code) {
      case kOk:
        return 0;
      case kNotConverged:
        return 1;
      case kInfeasible:
        return 2;
      default:
        return 3;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

int cmd_solve(const std::vector<std::string>& paths, const SolveSettings& settings, std::ostream& out,
              std::ostream& err, Style style) {
  if (settings.method != "dual" && settings.method != "delta") {
    err << "error: unknown solver '" << settings.method << "' (expected dual or delta)\n";
    return kInputError;
  }
  std::vector<Outcome> outcomes(paths.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(settings.jobs, paths.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < paths.size(); k = next++) outcomes[k] = solve_one(paths[k], settings, style);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  int code = kOk;
  const bool batch = paths.size() > 1;
  if (batch && !settings.out.empty()) fs::create_directories(settings.out);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    Outcome& o = outcomes[k];
    if (!o.report.empty()) {
      try {
        if (settings.out.empty()) {
          out << o.report;
        } else if (batch) {
          write_text(fs::path(settings.out) / (fs::path(paths[k]).stem().string() + ".report.json"), o.report);
        } else {
          write_text(settings.out, o.report);
        }
      } catch (const Error& e) {
        o.code = kInputError;
        o.summary += std::string("; ") + e.what();
      }
    }
    err << o.summary << "\n";
    code = worst_exit_code(code, o.code);
  }
  return code;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err, Style style) {
  const std::string name = fs::path(path).filename().string();
  try {
    const ProblemFile file = parse_problem_text(read_file(path));
    const ResolvedProblem problem = resolve(file);
    bool feasible = true;
    if (const auto* c = std::get_if<ClassicalProblem>(&problem)) {
      const ReducedProblem r = reduce_problem(*c);
      out << name << ": classical problem, " << c->outcomes << " outcomes\n";
      out << "  " << r.partition.size() << " orbits, degeneracies";
      for (std::size_t d : r.partition.degeneracies) out << " " << d;
      out << "\n";
      for (std::size_t i = 0; i < c->targets.size(); ++i) {
        const auto& row = r.reduced_observables[i];
        const double lo = *std::min_element(row.begin(), row.end());
        const double hi = *std::max_element(row.begin(), row.end());
        const bool ok = c->targets[i] >= lo - 1e-12 * std::max(1.0, std::abs(lo)) &&
                        c->targets[i] <= hi + 1e-12 * std::max(1.0, std::abs(hi));
        feasible = feasible && ok;
        out << "  obs[" << i << "]: target " << short_number(c->targets[i]) << (ok ? " within [" : " outside [")
            << short_number(lo) << ", " << short_number(hi) << "]\n";
      }
    } else {
      const auto& q = std::get<QuantumProblem>(problem);
      const ConstraintSet constraints = merged_constraints(q);
      const FeasibilityCheck f = check_feasibility(q);
      const std::size_t n = q.observables.size();
      out << name << ": quantum problem, dim " << q.dim << ", basis " << file.basis << "\n";
      out << "  " << n << (n == 1 ? " observable constraint\n" : " observable constraints\n");
      const std::size_t s = constraints.size() - n;
      out << "  " << s << (s == 1 ? " symmetry constraint\n" : " symmetry constraints\n");
      out << "  labels:";
      for (const auto& origin : constraints.provenance) out << " " << origin.label(&q.basis);
      out << "\n";
      for (std::size_t i = 0; i < n; ++i) {
        const bool ok = q.targets[i] >= f.lower[i] - 1e-12 * std::max(1.0, std::abs(f.lower[i])) &&
                        q.targets[i] <= f.upper[i] + 1e-12 * std::max(1.0, std::abs(f.upper[i]));
        out << "  obs[" << i << "]: target " << short_number(q.targets[i]) << (ok ? " within [" : " outside [")
            << short_number(f.lower[i]) << ", " << short_number(f.upper[i]) << "]\n";
      }
      feasible = f.feasible;
    }
    out << "  " << (feasible ? paint("feasible", kOk, style) : paint("infeasible", kInfeasible, style)) << "\n";
    return feasible ? kOk : kInfeasible;
  } catch (const Error& e) {
    err << name << ": " << paint("error", kInputError, style) << ": " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_basis(const std::string& kind, std::size_t dim, std::ostream& out, std::ostream& err) {
  try {
    OperatorBasis b;
    if (kind == "gell_mann") {
      b = gell_mann_basis(dim);
    } else if (kind == "two_qubit_paper") {
      if (dim != 4) throw DomainError("two_qubit_paper basis has dimension 4");
      b = two_qubit_paper_basis();
    } else {
      throw LookupError("unknown basis kind '" + kind + "' (expected gell_mann or two_qubit_paper)");
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["kind"] = kind;
    j["dim"] = dim;
    nlohmann::ordered_json elements = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < b.size(); ++k)
      elements.push_back({{"label", b.labels[k]}, {"matrix", matrix_to_json(b.elements[k].matrix())}});
    j["elements"] = std::move(elements);
    out << dump(j);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace symmax::cli

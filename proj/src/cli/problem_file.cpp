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

#include "symmax/cli/problem_file.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "symmax/basis.hpp"
#include "symmax/cli/expression.hpp"
#include "symmax/errors.hpp"

namespace symmax::cli {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string at(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string at(const std::string& base, std::size_t index) { return base + "[" + std::to_string(index) + "]"; }

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
}

void reject_unknown_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ParseError(at(where, key), "unknown field");
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where, "expected a finite number");
  return v;
}

std::size_t positive_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) throw ParseError(where, "expected a positive integer");
  return j.get<std::size_t>();
}

std::string string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

OperatorSource operator_source(const json& j, const std::string& where) {
  OperatorSource src;
  if (j.is_string()) {
    src.form = OperatorSource::Form::Expr;
    src.text = j.get<std::string>();
    Expression::parse(src.text);
    return src;
  }
  require_object(j, where);
  const int forms = static_cast<int>(j.contains("name")) + static_cast<int>(j.contains("expr")) +
                    static_cast<int>(j.contains("matrix"));
  if (forms != 1) throw ParseError(where, "give exactly one of \"name\", \"expr\" or \"matrix\"");
  if (j.contains("name")) {
    src.form = OperatorSource::Form::Name;
    src.text = string(j["name"], at(where, "name"));
  } else if (j.contains("expr")) {
    src.form = OperatorSource::Form::Expr;
    src.text = string(j["expr"], at(where, "expr"));
    try {
      Expression::parse(src.text);
    } catch (const ParseError& e) {
      throw ParseError(at(where, "expr"), e.what());
    }
  } else {
    src.form = OperatorSource::Form::Matrix;
    src.matrix = matrix_from_json(j["matrix"], at(where, "matrix"));
  }
  return src;
}

ordered_json operator_to_json(const OperatorSource& src) {
  ordered_json j = ordered_json::object();
  switch (src.form) {
    case OperatorSource::Form::Name:
      j["name"] = src.text;
      break;
    case OperatorSource::Form::Expr:
      j["expr"] = src.text;
      break;
    case OperatorSource::Form::Matrix:
      j["matrix"] = matrix_to_json(src.matrix);
      break;
  }
  return j;
}

std::vector<std::vector<std::size_t>> permutation_cycles(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected a cycle or a list of cycles");
  std::vector<std::vector<std::size_t>> cycles;
  const bool single = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_number(); });
  auto read_cycle = [&](const json& c, const std::string& path) {
    if (!c.is_array()) throw ParseError(path, "expected an array of 1-based outcome indices");
    std::vector<std::size_t> cycle;
    for (std::size_t k = 0; k < c.size(); ++k) cycle.push_back(positive_integer(c[k], at(path, k)));
    return cycle;
  };
  if (single) {
    cycles.push_back(read_cycle(j, where));
  } else {
    for (std::size_t k = 0; k < j.size(); ++k) cycles.push_back(read_cycle(j[k], at(where, k)));
  }
  return cycles;
}

ComplexMatrix evaluate(const OperatorSource& src, std::size_t dim) {
  switch (src.form) {
    case OperatorSource::Form::Name:
      return named_matrix(src.text, dim);
    case OperatorSource::Form::Expr:
      return Expression::parse(src.text).evaluate(dim);
    case OperatorSource::Form::Matrix:
      if (static_cast<std::size_t>(src.matrix.rows()) != dim) {
        throw DimensionError("matrix is " + std::to_string(src.matrix.rows()) + "×" +
                             std::to_string(src.matrix.cols()) + ", problem dimension is " + std::to_string(dim));
      }
      return src.matrix;
  }
  return {};
}

// Runs `f`, turning library errors into ParseError at `where`.
template <typename F>
auto at_field(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where, e.what());
  }
}

}  // namespace

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where, "expected a non-empty array of rows");
  const std::size_t n = j.size();
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_path = at(where, r);
    if (!j[r].is_array() || j[r].size() != n) {
      throw ParseError(row_path, "expected a row of " + std::to_string(n) + " entries (matrices must be square)");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const json& e = j[r][c];
      const std::string path = at(row_path, c);
      Complex v;
      if (e.is_number()) {
        v = number(e, path);
      } else if (e.is_array() && e.size() == 2) {
        v = Complex(number(e[0], at(path, 0)), number(e[1], at(path, 1)));
      } else {
        throw ParseError(path, "expected a number or an [re, im] pair");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return m;
}

ProblemFile parse_problem(const json& j) {
  require_object(j, "");
  ProblemFile p;
  if (!j.contains("kind")) throw ParseError("kind", "missing required field");
  const std::string kind = string(j["kind"], "kind");
  if (kind == "classical") {
    p.kind = ProblemFile::Kind::Classical;
    reject_unknown_keys(j, "", {"kind", "outcomes", "description", "observables", "symmetry"});
    if (!j.contains("outcomes")) throw ParseError("outcomes", "missing required field");
    p.size = positive_integer(j["outcomes"], "outcomes");
  } else if (kind == "quantum") {
    p.kind = ProblemFile::Kind::Quantum;
    reject_unknown_keys(j, "", {"kind", "dim", "description", "observables", "symmetry", "basis"});
    if (!j.contains("dim")) throw ParseError("dim", "missing required field");
    p.size = positive_integer(j["dim"], "dim");
  } else {
    throw ParseError("kind", "expected \"classical\" or \"quantum\", got \"" + kind + "\"");
  }
  if (j.contains("description")) p.description = string(j["description"], "description");

  if (j.contains("observables")) {
    const json& obs = j["observables"];
    if (!obs.is_array()) throw ParseError("observables", "expected an array");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const std::string where = at("observables", i);
      require_object(obs[i], where);
      ObservableEntry e;
      if (!obs[i].contains("target")) throw ParseError(at(where, "target"), "missing required field");
      e.target = number(obs[i]["target"], at(where, "target"));
      if (p.kind == ProblemFile::Kind::Classical) {
        reject_unknown_keys(obs[i], where, {"values", "target"});
        if (!obs[i].contains("values")) throw ParseError(at(where, "values"), "missing required field");
        const json& values = obs[i]["values"];
        if (!values.is_array()) throw ParseError(at(where, "values"), "expected an array of numbers");
        for (std::size_t k = 0; k < values.size(); ++k) e.values.push_back(number(values[k], at(at(where, "values"), k)));
      } else {
        reject_unknown_keys(obs[i], where, {"name", "expr", "matrix", "target"});
        json op = obs[i];
        op.erase("target");
        e.op = operator_source(op, where);
      }
      p.observables.push_back(std::move(e));
    }
  }

  if (j.contains("symmetry")) {
    const json& s = j["symmetry"];
    require_object(s, "symmetry");
    reject_unknown_keys(s, "symmetry", {"type", "generators"});
    if (!s.contains("type")) throw ParseError("symmetry.type", "missing required field");
    const std::string type = string(s["type"], "symmetry.type");
    SymmetryEntry entry;
    if (type == "lie") {
      entry.type = SymmetryEntry::Type::Lie;
    } else if (type == "finite_group") {
      entry.type = SymmetryEntry::Type::FiniteGroup;
    } else if (type == "permutations") {
      entry.type = SymmetryEntry::Type::Permutations;
    } else {
      throw ParseError("symmetry.type", "expected \"lie\", \"finite_group\" or \"permutations\", got \"" + type + "\"");
    }
    const bool classical = p.kind == ProblemFile::Kind::Classical;
    if (classical != (entry.type == SymmetryEntry::Type::Permutations)) {
      throw ParseError("symmetry.type", classical ? "classical problems take \"permutations\""
                                                  : "quantum problems take \"lie\" or \"finite_group\"");
    }
    if (!s.contains("generators") || !s["generators"].is_array()) {
      throw ParseError("symmetry.generators", "expected an array");
    }
    const json& gens = s["generators"];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::string where = at("symmetry.generators", k);
      if (classical) {
        entry.permutations.push_back(permutation_cycles(gens[k], where));
      } else {
        entry.operators.push_back(operator_source(gens[k], where));
      }
    }
    p.symmetry = std::move(entry);
  }

  if (j.contains("basis")) {
    p.basis = string(j["basis"], "basis");
    if (p.basis != "gell_mann" && p.basis != "two_qubit_paper") {
      throw ParseError("basis", "expected \"gell_mann\" or \"two_qubit_paper\", got \"" + p.basis + "\"");
    }
  }
  return p;
}

ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
    const std::size_t line_start = text.rfind('\n', offset == 0 ? 0 : offset - 1);
    const std::size_t column = line_start == std::string::npos || offset == 0 ? offset + 1 : offset - line_start;
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column), "invalid JSON");
  }
  return parse_problem(j);
}

ordered_json to_json(const ProblemFile& p) {
  ordered_json j = ordered_json::object();
  const bool classical = p.kind == ProblemFile::Kind::Classical;
  j["kind"] = classical ? "classical" : "quantum";
  j[classical ? "outcomes" : "dim"] = p.size;
  if (!p.description.empty()) j["description"] = p.description;
  ordered_json obs = ordered_json::array();
  for (const auto& e : p.observables) {
    ordered_json o = e.op ? operator_to_json(*e.op) : ordered_json::object();
    if (classical) o["values"] = e.values;
    o["target"] = e.target;
    obs.push_back(std::move(o));
  }
  j["observables"] = std::move(obs);
  if (p.symmetry) {
    ordered_json s = ordered_json::object();
    switch (p.symmetry->type) {
      case SymmetryEntry::Type::Lie:
        s["type"] = "lie";
        break;
      case SymmetryEntry::Type::FiniteGroup:
        s["type"] = "finite_group";
        break;
      case SymmetryEntry::Type::Permutations:
        s["type"] = "permutations";
        break;
    }
    ordered_json gens = ordered_json::array();
    for (const auto& op : p.symmetry->operators) gens.push_back(operator_to_json(op));
    for (const auto& cycles : p.symmetry->permutations) gens.push_back(cycles);
    s["generators"] = std::move(gens);
    j["symmetry"] = std::move(s);
  }
  if (!classical) j["basis"] = p.basis;
  return j;
}

ResolvedProblem resolve(const ProblemFile& p) {
  if (p.kind == ProblemFile::Kind::Classical) {
    ClassicalProblem c;
    c.outcomes = p.size;
    for (std::size_t i = 0; i < p.observables.size(); ++i) {
      if (p.observables[i].values.size() != p.size) {
        throw ParseError(at(at("observables", i), "values"),
                         "expected " + std::to_string(p.size) + " values, got " +
                             std::to_string(p.observables[i].values.size()));
      }
      c.observables.push_back(p.observables[i].values);
      c.targets.push_back(p.observables[i].target);
    }
    if (p.symmetry) {
      for (std::size_t k = 0; k < p.symmetry->permutations.size(); ++k) {
        c.symmetry.push_back(at_field(at("symmetry.generators", k),
                                      [&] { return Permutation::from_cycles(p.symmetry->permutations[k], p.size); }));
      }
    }
    at_field("", [&] {
      validate(c);
      return 0;
    });
    return c;
  }

  QuantumProblem q;
  q.dim = p.size;
  for (std::size_t i = 0; i < p.observables.size(); ++i) {
    const std::string where = at("observables", i);
    q.observables.push_back(at_field(where, [&] { return HermitianOperator(evaluate(*p.observables[i].op, p.size)); }));
    q.targets.push_back(p.observables[i].target);
  }
  if (p.symmetry) {
    if (p.symmetry->type == SymmetryEntry::Type::Lie) {
      LieSymmetry lie;
      for (std::size_t k = 0; k < p.symmetry->operators.size(); ++k) {
        lie.generators.push_back(at_field(at("symmetry.generators", k), [&] {
          return HermitianOperator(evaluate(p.symmetry->operators[k], p.size));
        }));
      }
      q.symmetry = std::move(lie);
    } else {
      std::vector<ComplexMatrix> unitaries;
      for (std::size_t k = 0; k < p.symmetry->operators.size(); ++k) {
        unitaries.push_back(at_field(at("symmetry.generators", k), [&] {
          ComplexMatrix u = evaluate(p.symmetry->operators[k], p.size);
          if (!is_unitary(u)) throw DomainError("generator is not unitary");
          return u;
        }));
      }
      q.symmetry = FiniteGroupSymmetry(std::move(unitaries));
    }
  }
  q.basis = at_field("basis", [&] {
    if (p.basis == "two_qubit_paper") {
      if (p.size != 4) throw DomainError("two_qubit_paper basis needs dim 4");
      return two_qubit_paper_basis();
    }
    if (p.size < 2) throw DomainError("gell_mann basis needs dim ≥ 2");
    return gell_mann_basis(p.size);
  });
  return q;
}

}  // namespace symmax::cli

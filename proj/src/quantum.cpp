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

#include "symmax/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "symmax/errors.hpp"

namespace symmax {

namespace {

using Index = Eigen::Index;

constexpr double kArmijo = 1e-4;
constexpr double kShrink = 0.5;
constexpr int kMaxBacktracks = 60;
constexpr std::size_t kGradientPhase = 10;
constexpr double kFeasibilitySlack = 1e-12;
constexpr double kFaceTolerance = 1e-10;
constexpr double kBoundaryResidual = 1e-6;
constexpr double kJacobianStep = 1e-6;
constexpr double kDeltaFloor = 1e-30;

void validate(const QuantumProblem& p) {
  if (p.dim == 0) throw DomainError("quantum problem needs a positive dimension");
  if (p.observables.size() != p.targets.size()) {
    throw DimensionError("quantum problem: " + std::to_string(p.observables.size()) +
                         " observables but " + std::to_string(p.targets.size()) + " targets");
  }
  for (std::size_t i = 0; i < p.observables.size(); ++i) {
    if (p.observables[i].dim() != p.dim) {
      throw DimensionError("observable " + std::to_string(i) + " has dimension " +
                           std::to_string(p.observables[i].dim()) + ", expected " + std::to_string(p.dim));
    }
    if (!std::isfinite(p.targets[i])) throw DomainError("target " + std::to_string(i) + " is not finite");
  }
  if (p.symmetry) {
    if (std::holds_alternative<PermutationSymmetry>(*p.symmetry)) {
      throw DomainError("quantum problems take Lie or finite-group symmetries, not permutations");
    }
    const std::size_t sd = symmetry_dim(*p.symmetry);
    if (sd != 0 && sd != p.dim) {
      throw DimensionError("symmetry acts on dimension " + std::to_string(sd) + ", problem has " +
                           std::to_string(p.dim));
    }
  }
}

const OperatorBasis& basis_for(const QuantumProblem& p, OperatorBasis& fallback) {
  if (p.basis.dim == 0 && p.dim >= 2) {
    fallback = gell_mann_basis(p.dim);
    return fallback;
  }
  if (p.basis.dim != p.dim) {
    throw DimensionError("operator basis has dimension " + std::to_string(p.basis.dim) +
                         ", problem has " + std::to_string(p.dim));
  }
  return p.basis;
}

struct DualPoint {
  double value = 0.0;
  double log_partition = 0.0;
  RealVector gradient;  // Tr(ρ C) − t
  GibbsState gibbs;
};

class Dual {
 public:
  explicit Dual(const ConstraintSet& c) : c_(c) {
    targets_ = RealVector(static_cast<Index>(c.size()));
    for (std::size_t k = 0; k < c.size(); ++k) targets_(static_cast<Index>(k)) = c.targets[k];
  }

  std::size_t size() const { return c_.size(); }

  DualPoint evaluate(const RealVector& theta) const {
    const std::vector<double> t(theta.data(), theta.data() + theta.size());
    GibbsState g = gibbs_state_of(t);
    DualPoint out{0.0, g.log_partition, RealVector(theta.size()), std::move(g)};
    for (std::size_t k = 0; k < c_.size(); ++k) {
      out.gradient(static_cast<Index>(k)) = out.gibbs.state.expectation(c_.operators[k]) - c_.targets[k];
    }
    out.value = out.log_partition - theta.dot(targets_);
    return out;
  }

  RealVector residuals(const RealVector& theta) const { return evaluate(theta).gradient; }

 private:
  GibbsState gibbs_state_of(const std::vector<double>& theta) const {
    if (c_.operators.empty()) return {DensityMatrix::maximally_mixed(c_.dim), std::log(static_cast<double>(c_.dim))};
    return gibbs_state(c_.operators, theta);
  }

  const ConstraintSet& c_;
  RealVector targets_;
};

enum class Termination { Converged, Capped, Stalled, IterationCap };

SolverStatus classify(Termination how, bool infeasible, bool on_face, double worst_residual) {
  if (infeasible) return SolverStatus::Infeasible;
  if (on_face) return SolverStatus::Boundary;
  switch (how) {
    case Termination::Converged:
      return SolverStatus::Converged;
    case Termination::Capped:
      return worst_residual <= kBoundaryResidual ? SolverStatus::Boundary : SolverStatus::Infeasible;
    case Termination::Stalled:
    case Termination::IterationCap:
      break;
  }
  return SolverStatus::MaxIterations;
}

SolverReport make_report(const QuantumProblem& p, const ConstraintSet& c, const OperatorBasis& basis,
                         const RealVector& theta, const GibbsState& g, std::size_t iterations,
                         SolverStatus status, std::string solver) {
  SolverReport r;
  r.state = g.state;
  r.log_partition = g.log_partition;
  r.entropy = entropy_vn(g.state);
  r.iterations = iterations;
  r.status = status;
  r.solver = std::move(solver);
  const std::size_t n = p.observables.size();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double value = theta(static_cast<Index>(k));
    (k < n ? r.lambda : r.gamma).push_back(value);
    r.labels.push_back(c.provenance[k].label(&basis));
    r.residuals.push_back(std::abs(g.state.expectation(c.operators[k]) - c.targets[k]));
  }
  r.invariance = p.symmetry ? invariance_residual(g.state, *p.symmetry) : 0.0;
  return r;
}

double max_or_zero(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

std::string_view to_string(SolverStatus status) {
  switch (status) {
    case SolverStatus::Converged:
      return "converged";
    case SolverStatus::Boundary:
      return "boundary";
    case SolverStatus::Infeasible:
      return "infeasible";
    case SolverStatus::MaxIterations:
      return "max_iterations";
  }
  return "unknown";
}

GibbsState gibbs_state(const std::vector<HermitianOperator>& operators,
                       const std::vector<double>& multipliers) {
  if (operators.size() != multipliers.size()) {
    throw DimensionError("gibbs_state: " + std::to_string(operators.size()) + " operators but " +
                         std::to_string(multipliers.size()) + " multipliers");
  }
  if (operators.empty()) throw DimensionError("gibbs_state: no operators, dimension unknown");
  const std::size_t m = operators.front().dim();
  ComplexMatrix exponent = ComplexMatrix::Zero(static_cast<Index>(m), static_cast<Index>(m));
  for (std::size_t c = 0; c < operators.size(); ++c) {
    if (operators[c].dim() != m) throw DimensionError("gibbs_state: operators have different dimensions");
    if (!std::isfinite(multipliers[c])) throw DomainError("gibbs_state: non-finite multiplier");
    exponent += multipliers[c] * operators[c].matrix();
  }
  const Eigendecomposition e = eig_hermitian(hermitian_part(exponent));
  const double top = e.eigenvalues(e.eigenvalues.size() - 1);
  RealVector weights = (e.eigenvalues.array() - top).exp();
  const double shifted_z = weights.sum();
  return {DensityMatrix::from_spectrum(e.eigenvectors, weights), top + std::log(shifted_z)};
}

LogPartitionGradient log_partition_gradient(const std::vector<HermitianOperator>& operators,
                                            const std::vector<double>& multipliers) {
  const GibbsState g = gibbs_state(operators, multipliers);
  LogPartitionGradient out{g.log_partition, {}};
  out.gradient.reserve(operators.size());
  for (const auto& c : operators) out.gradient.push_back(g.state.expectation(c));
  return out;
}

double entropy_vn(const DensityMatrix& rho) {
  const RealVector w = eigvals_hermitian(HermitianOperator(rho.matrix()));
  double h = 0.0;
  for (Index j = 0; j < w.size(); ++j) {
    if (w(j) < -1e-10) throw DomainError("entropy_vn: negative eigenvalue");
    if (w(j) > 0.0) h -= w(j) * std::log(w(j));
  }
  return h;
}

ConstraintSet merged_constraints(const QuantumProblem& p) {
  validate(p);
  OperatorBasis fallback;
  ConstraintSet out;
  out.dim = p.dim;
  for (std::size_t i = 0; i < p.observables.size(); ++i) {
    out.operators.push_back(p.observables[i]);
    out.targets.push_back(p.targets[i]);
    out.provenance.push_back({ConstraintOrigin::Kind::Observable, i, 0, ConstraintOrigin::Part::Whole});
  }
  if (p.symmetry && symmetry_dim(*p.symmetry) != 0) {
    const ConstraintSet sym = compile_constraints(*p.symmetry, basis_for(p, fallback));
    out.operators.insert(out.operators.end(), sym.operators.begin(), sym.operators.end());
    out.targets.insert(out.targets.end(), sym.targets.begin(), sym.targets.end());
    out.provenance.insert(out.provenance.end(), sym.provenance.begin(), sym.provenance.end());
  }
  return out;
}

FeasibilityCheck check_feasibility(const QuantumProblem& p) {
  validate(p);
  FeasibilityCheck out;
  for (std::size_t i = 0; i < p.observables.size(); ++i) {
    const HermitianOperator projected =
        p.symmetry && symmetry_dim(*p.symmetry) != 0 ? commutant_project(p.observables[i], *p.symmetry)
                                                     : p.observables[i];
    const RealVector spectrum = eigvals_hermitian(projected);
    const double lo = spectrum(0);
    const double hi = spectrum(spectrum.size() - 1);
    const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
    const double a = p.targets[i];
    out.lower.push_back(lo);
    out.upper.push_back(hi);
    if (a < lo - kFeasibilitySlack * scale || a > hi + kFeasibilitySlack * scale) out.feasible = false;
    if (hi - lo > kFaceTolerance * scale &&
        (std::abs(a - hi) <= kFaceTolerance * scale || std::abs(a - lo) <= kFaceTolerance * scale)) {
      out.on_boundary = true;
    }
  }
  return out;
}

SolverReport solve_dual(const QuantumProblem& p, const SolverOptions& opts) {
  const ConstraintSet constraints = merged_constraints(p);
  OperatorBasis fallback;
  const OperatorBasis& basis = p.dim >= 2 ? basis_for(p, fallback) : fallback;
  const FeasibilityCheck feasibility = check_feasibility(p);

  const Dual dual(constraints);
  const auto k = static_cast<Index>(dual.size());
  RealVector theta = RealVector::Zero(k);
  DualPoint point = dual.evaluate(theta);
  std::size_t iterations = 0;
  Termination how = Termination::IterationCap;

  if (feasibility.feasible) {
    RealMatrix inverse_hessian = RealMatrix::Identity(k, k);
    bool scaled = false;
    while (true) {
      if (k == 0 || point.gradient.cwiseAbs().maxCoeff() <= opts.tol) {
        how = Termination::Converged;
        break;
      }
      if (iterations >= opts.max_iterations) break;

      const bool quasi_newton = iterations >= kGradientPhase;
      RealVector dir = quasi_newton ? RealVector(-inverse_hessian * point.gradient) : RealVector(-point.gradient);
      if (point.gradient.dot(dir) >= 0.0) {
        inverse_hessian.setIdentity();
        dir = -point.gradient;
      }

      double step = 1.0;
      bool accepted = false;
      DualPoint trial;
      for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
        const double slope = point.gradient.dot(dir);
        const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(point.value);
        step = 1.0;
        for (int b = 0; b < kMaxBacktracks; ++b) {
          trial = dual.evaluate(theta + step * dir);
          if (trial.value <= point.value + kArmijo * step * slope + slack) {
            accepted = true;
            break;
          }
          step *= kShrink;
        }
        if (!accepted) {
          inverse_hessian.setIdentity();
          dir = -point.gradient;
        }
      }
      if (!accepted) {
        how = Termination::Stalled;
        break;
      }

      const RealVector s = step * dir;
      const RealVector y = trial.gradient - point.gradient;
      const double sy = s.dot(y);
      if (sy > 1e-12 * s.norm() * y.norm()) {
        if (!scaled) {
          inverse_hessian = (sy / y.squaredNorm()) * RealMatrix::Identity(k, k);
          scaled = true;
        }
        const double rho = 1.0 / sy;
        const RealMatrix left = RealMatrix::Identity(k, k) - rho * s * y.transpose();
        inverse_hessian = left * inverse_hessian * left.transpose() + rho * s * s.transpose();
      }
      theta += s;
      point = std::move(trial);
      ++iterations;
      if (theta.cwiseAbs().maxCoeff() > opts.multiplier_cap) {
        how = Termination::Capped;
        break;
      }
    }
  }

  std::vector<double> residuals(static_cast<std::size_t>(k));
  for (Index c = 0; c < k; ++c) residuals[static_cast<std::size_t>(c)] = std::abs(point.gradient(c));
  const SolverStatus status =
      classify(how, !feasibility.feasible, feasibility.on_boundary, max_or_zero(residuals));
  return make_report(p, constraints, basis, theta, point.gibbs, iterations, status, "dual");
}

SolverReport solve_delta(const QuantumProblem& p, const SolverOptions& opts) {
  const ConstraintSet constraints = merged_constraints(p);
  OperatorBasis fallback;
  const OperatorBasis& basis = p.dim >= 2 ? basis_for(p, fallback) : fallback;
  const FeasibilityCheck feasibility = check_feasibility(p);

  const Dual dual(constraints);
  const auto k = static_cast<Index>(dual.size());

  struct Attempt {
    RealVector theta;
    double delta = std::numeric_limits<double>::infinity();
    Termination how = Termination::IterationCap;
  };

  std::size_t iterations = 0;
  auto run = [&](RealVector theta) {
    Attempt a;
    RealVector r = dual.residuals(theta);
    double delta = r.squaredNorm();
    double damping = 1e-3;
    Termination how = Termination::IterationCap;
    while (true) {
      if (delta <= kDeltaFloor) {
        how = Termination::Converged;
        break;
      }
      if (iterations >= opts.max_iterations) break;
      RealMatrix jac(k, k);
      for (Index c = 0; c < k; ++c) {
        RealVector plus = theta;
        RealVector minus = theta;
        plus(c) += kJacobianStep;
        minus(c) -= kJacobianStep;
        jac.col(c) = (dual.residuals(plus) - dual.residuals(minus)) / (2.0 * kJacobianStep);
      }
      const RealVector grad = jac.transpose() * r;  // half the gradient of Δ
      const RealMatrix normal = jac.transpose() * jac;
      ++iterations;

      bool improved = false;
      while (damping < 1e12) {
        const RealMatrix lhs = normal + damping * RealMatrix::Identity(k, k);
        const RealVector step = -lhs.ldlt().solve(grad);
        const RealVector candidate = theta + step;
        const RealVector rc = dual.residuals(candidate);
        const double dc = rc.squaredNorm();
        if (std::isfinite(dc) && dc < delta) {
          theta = candidate;
          r = rc;
          delta = dc;
          damping = std::max(damping / 3.0, 1e-15);
          improved = true;
          break;
        }
        damping *= 4.0;
      }
      if (!improved) {
        how = Termination::Stalled;
        break;
      }
      if (theta.cwiseAbs().maxCoeff() > opts.multiplier_cap) {
        how = Termination::Capped;
        break;
      }
    }
    a.theta = std::move(theta);
    a.delta = delta;
    a.how = how;
    return a;
  };

  Attempt best;
  best.theta = RealVector::Zero(k);
  best.delta = dual.residuals(best.theta).squaredNorm();
  if (feasibility.feasible) {
    for (std::size_t restart = 0; restart <= opts.restarts; ++restart) {
      RealVector start = RealVector::Zero(k);
      if (restart > 0) {
        std::mt19937_64 rng(opts.seed + restart);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (Index c = 0; c < k; ++c) start(c) = normal(rng);
      }
      Attempt a = run(std::move(start));
      const bool done = a.delta <= opts.delta_tol;
      if (restart == 0 || a.delta < best.delta) best = std::move(a);
      if (done) break;
    }
  }

  const DualPoint point = dual.evaluate(best.theta);
  std::vector<double> residuals(static_cast<std::size_t>(k));
  for (Index c = 0; c < k; ++c) residuals[static_cast<std::size_t>(c)] = std::abs(point.gradient(c));
  Termination how = best.delta <= opts.delta_tol ? Termination::Converged : best.how;
  if (how == Termination::Converged && best.delta > opts.delta_tol) how = Termination::Stalled;
  const SolverStatus status =
      classify(how, !feasibility.feasible, feasibility.on_boundary, max_or_zero(residuals));
  return make_report(p, constraints, basis, best.theta, point.gibbs, iterations, status, "delta");
}

}  // namespace symmax

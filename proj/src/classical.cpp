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

#include "symmax/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "symmax/errors.hpp"

namespace symmax {

namespace {

using Index = Eigen::Index;

constexpr double kSingularHessian = 1e-12;
constexpr double kArmijo = 1e-4;
constexpr double kShrink = 0.5;
constexpr int kMaxBacktracks = 60;
constexpr double kFeasibilitySlack = 1e-12;
constexpr double kFaceTolerance = 1e-10;
constexpr double kBoundaryResidual = 1e-6;

struct DualState {
  double value = 0.0;  // D(λ)
  double log_partition = 0.0;
  RealVector gradient;
  RealMatrix hessian;
  std::vector<double> orbit_probabilities;
};

class ReducedDual {
 public:
  explicit ReducedDual(const ReducedProblem& r)
      : n_(r.reduced_observables.size()), orbits_(r.partition.size()), reduced_(r) {}

  DualState evaluate(const RealVector& lambda) const {
    std::vector<double> exponent(orbits_, 0.0);
    for (std::size_t l = 0; l < orbits_; ++l)
      for (std::size_t i = 0; i < n_; ++i)
        exponent[l] += lambda(static_cast<Index>(i)) * reduced_.reduced_observables[i][l];
    const double top = orbits_ == 0 ? 0.0 : *std::max_element(exponent.begin(), exponent.end());

    DualState s;
    s.orbit_probabilities.resize(orbits_);
    double z = 0.0;
    for (std::size_t l = 0; l < orbits_; ++l) {
      s.orbit_probabilities[l] = std::exp(exponent[l] - top);
      z += static_cast<double>(reduced_.partition.degeneracies[l]) * s.orbit_probabilities[l];
    }
    for (auto& q : s.orbit_probabilities) q /= z;
    s.log_partition = top + std::log(z);

    const auto n = static_cast<Index>(n_);
    RealVector mean = RealVector::Zero(n);
    for (std::size_t l = 0; l < orbits_; ++l) {
      const double weight = static_cast<double>(reduced_.partition.degeneracies[l]) * s.orbit_probabilities[l];
      for (std::size_t i = 0; i < n_; ++i) mean(static_cast<Index>(i)) += weight * reduced_.reduced_observables[i][l];
    }
    s.hessian = RealMatrix::Zero(n, n);
    for (std::size_t l = 0; l < orbits_; ++l) {
      const double weight = static_cast<double>(reduced_.partition.degeneracies[l]) * s.orbit_probabilities[l];
      RealVector centred(n);
      for (std::size_t i = 0; i < n_; ++i)
        centred(static_cast<Index>(i)) = reduced_.reduced_observables[i][l] - mean(static_cast<Index>(i));
      s.hessian.noalias() += weight * centred * centred.transpose();
    }

    RealVector targets(n);
    for (std::size_t i = 0; i < n_; ++i) targets(static_cast<Index>(i)) = reduced_.targets[i];
    s.gradient = mean - targets;
    s.value = s.log_partition - lambda.dot(targets);
    return s;
  }

 private:
  std::size_t n_;
  std::size_t orbits_;
  const ReducedProblem& reduced_;
};

// Newton direction on the well-conditioned eigenspace of H, plain gradient
// direction on the numerically singular part.
RealVector newton_direction(const RealMatrix& hessian, const RealVector& gradient) {
  const Eigen::SelfAdjointEigenSolver<RealMatrix> eig(hessian);
  const RealVector& mu = eig.eigenvalues();
  const RealMatrix& v = eig.eigenvectors();
  RealVector dir = RealVector::Zero(gradient.size());
  for (Index k = 0; k < mu.size(); ++k) {
    const double component = v.col(k).dot(gradient);
    dir -= (mu(k) > kSingularHessian ? component / mu(k) : component) * v.col(k);
  }
  return dir;
}

}  // namespace

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

void validate(const ClassicalProblem& p) {
  if (p.outcomes == 0) throw DomainError("classical problem needs at least one outcome");
  if (p.targets.size() != p.observables.size()) {
    throw DimensionError("classical problem: " + std::to_string(p.observables.size()) +
                         " observables but " + std::to_string(p.targets.size()) + " targets");
  }
  for (std::size_t i = 0; i < p.observables.size(); ++i) {
    if (p.observables[i].size() != p.outcomes) {
      throw DimensionError("observable " + std::to_string(i) + " has " +
                           std::to_string(p.observables[i].size()) + " values, expected " +
                           std::to_string(p.outcomes));
    }
    for (double v : p.observables[i])
      if (!std::isfinite(v)) throw DomainError("observable " + std::to_string(i) + " has a non-finite value");
    if (!std::isfinite(p.targets[i])) throw DomainError("target " + std::to_string(i) + " is not finite");
  }
  for (const auto& g : p.symmetry) {
    if (g.size() != p.outcomes) {
      throw DomainError("permutation acts on " + std::to_string(g.size()) + " points, expected " +
                        std::to_string(p.outcomes));
    }
  }
}

ReducedProblem reduce_problem(const ClassicalProblem& p) {
  validate(p);
  ReducedProblem r;
  r.partition = orbits(p.symmetry, p.outcomes);
  r.targets = p.targets;
  for (const auto& row : p.observables) {
    std::vector<double> reduced;
    reduced.reserve(r.partition.size());
    for (std::size_t l = 0; l < r.partition.size(); ++l) {
      double sum = 0.0;
      for (std::size_t j : r.partition.orbits[l]) sum += row[j];
      reduced.push_back(sum / static_cast<double>(r.partition.degeneracies[l]));
    }
    r.reduced_observables.push_back(std::move(reduced));
  }
  return r;
}

ClassicalDualValue classical_log_partition(const ReducedProblem& r, const std::vector<double>& lambda) {
  if (lambda.size() != r.reduced_observables.size()) {
    throw DimensionError("classical_log_partition: multiplier count mismatch");
  }
  const ReducedDual dual(r);
  const DualState s = dual.evaluate(Eigen::Map<const RealVector>(lambda.data(), static_cast<Index>(lambda.size())));
  ClassicalDualValue out;
  out.log_partition = s.log_partition;
  for (Index i = 0; i < s.gradient.size(); ++i) out.gradient.push_back(s.gradient(i) + r.targets[static_cast<std::size_t>(i)]);
  return out;
}

ClassicalSolution solve_classical(const ClassicalProblem& p, const SolverOptions& opts) {
  const ReducedProblem reduced = reduce_problem(p);
  const std::size_t n = p.observables.size();

  bool infeasible = false;
  bool on_face = false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = reduced.reduced_observables[i];
    const auto [lo_it, hi_it] = std::minmax_element(row.begin(), row.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
    const double a = p.targets[i];
    if (a < lo - kFeasibilitySlack * scale || a > hi + kFeasibilitySlack * scale) infeasible = true;
    if (hi - lo > kFaceTolerance * scale &&
        (std::abs(a - hi) <= kFaceTolerance * scale || std::abs(a - lo) <= kFaceTolerance * scale)) {
      on_face = true;
    }
  }

  const ReducedDual dual(reduced);
  RealVector lambda = RealVector::Zero(static_cast<Index>(n));
  DualState state = dual.evaluate(lambda);

  ClassicalSolution sol;
  bool converged = false;
  bool capped = false;
  if (!infeasible) {
    while (sol.iterations < opts.max_iterations) {
      if (n == 0 || state.gradient.cwiseAbs().maxCoeff() <= opts.tol) {
        converged = true;
        break;
      }
      const RealVector dir = newton_direction(state.hessian, state.gradient);
      const double slope = state.gradient.dot(dir);
      const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(state.value);
      double step = 1.0;
      bool accepted = false;
      DualState trial;
      for (int b = 0; b < kMaxBacktracks; ++b) {
        trial = dual.evaluate(lambda + step * dir);
        if (trial.value <= state.value + kArmijo * step * slope + slack) {
          accepted = true;
          break;
        }
        step *= kShrink;
      }
      if (!accepted) break;
      lambda += step * dir;
      state = std::move(trial);
      ++sol.iterations;
      if (lambda.cwiseAbs().maxCoeff() > opts.multiplier_cap) {
        capped = true;
        break;
      }
    }
  }

  sol.partition = reduced.partition;
  sol.orbit_probabilities = state.orbit_probabilities;
  sol.probabilities.assign(p.outcomes, 0.0);
  for (std::size_t l = 0; l < reduced.partition.size(); ++l)
    for (std::size_t j : reduced.partition.orbits[l]) sol.probabilities[j] = state.orbit_probabilities[l];
  sol.multipliers.assign(lambda.data(), lambda.data() + lambda.size());
  sol.log_partition = state.log_partition;
  sol.entropy = shannon_entropy(sol.probabilities);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double mean = 0.0;
    for (std::size_t j = 0; j < p.outcomes; ++j) mean += sol.probabilities[j] * p.observables[i][j];
    sol.residuals.push_back(std::abs(mean - p.targets[i]));
    worst = std::max(worst, sol.residuals.back());
  }

  if (infeasible) {
    sol.status = SolverStatus::Infeasible;
  } else if (on_face) {
    sol.status = SolverStatus::Boundary;
  } else if (converged) {
    sol.status = SolverStatus::Converged;
  } else if (capped) {
    sol.status = worst <= kBoundaryResidual ? SolverStatus::Boundary : SolverStatus::Infeasible;
  } else {
    sol.status = SolverStatus::MaxIterations;
  }
  return sol;
}

}  // namespace symmax

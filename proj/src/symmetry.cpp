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

#include "symmax/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symmax/errors.hpp"

namespace symmax {

namespace {

using Index = Eigen::Index;

constexpr double kDropNorm = 1e-10;
constexpr double kNullspaceThreshold = 1e-10;
constexpr Complex kI{0.0, 1.0};

void check_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(got) +
                         " does not match " + std::to_string(want));
  }
}

// Orthonormal Hermitian basis of all m×m Hermitian matrices.
std::vector<HermitianOperator> orthonormal_hermitian_basis(std::size_t m) {
  const OperatorBasis gm = gell_mann_basis(m);
  std::vector<HermitianOperator> out;
  out.reserve(gm.size());
  for (const auto& e : gm.elements) out.push_back(e * (1.0 / e.hs_norm()));
  return out;
}

// The real linear map X -> ([X, G_1], ..., [X, G_K]) on Hermitian X,
// written in the orthonormal basis `herm` with real and imaginary parts stacked.
RealMatrix commutation_map(const std::vector<HermitianOperator>& herm,
                           const std::vector<ComplexMatrix>& generators) {
  const auto m = static_cast<Index>(herm.front().dim());
  const Index block = 2 * m * m;
  RealMatrix map(block * static_cast<Index>(generators.size()), static_cast<Index>(herm.size()));
  for (std::size_t j = 0; j < herm.size(); ++j) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      const ComplexMatrix c = commutator(herm[j].matrix(), generators[k]);
      const Index offset = block * static_cast<Index>(k);
      for (Index e = 0; e < m * m; ++e) {
        map(offset + e, static_cast<Index>(j)) = c.data()[e].real();
        map(offset + m * m + e, static_cast<Index>(j)) = c.data()[e].imag();
      }
    }
  }
  return map;
}

std::vector<ComplexMatrix> generator_matrices(const SymmetrySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::vector<ComplexMatrix> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LieSymmetry>) {
          std::vector<ComplexMatrix> out;
          for (const auto& q : s.generators) out.push_back(q.matrix());
          return out;
        } else if constexpr (std::is_same_v<T, FiniteGroupSymmetry>) {
          return s.unitaries;
        } else {
          throw DomainError("commutant projection is undefined for classical permutation symmetry");
        }
      },
      spec);
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t j = 0; j < image_.size(); ++j) {
    const std::size_t target = image_[j];
    if (target >= image_.size() || hit[target]) {
      throw DomainError("permutation is not a bijection on {1.." + std::to_string(image_.size()) + "}");
    }
    hit[target] = true;
  }
}

Permutation Permutation::from_cycles(const std::vector<std::vector<std::size_t>>& cycles,
                                     std::size_t m) {
  std::vector<std::size_t> image(m);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<bool> seen(m, false);
  for (const auto& cycle : cycles) {
    for (std::size_t pos = 0; pos < cycle.size(); ++pos) {
      const std::size_t from = cycle[pos];
      const std::size_t to = cycle[(pos + 1) % cycle.size()];
      if (from < 1 || from > m || to < 1 || to > m) {
        throw DomainError("cycle entry out of range 1.." + std::to_string(m));
      }
      if (seen[from - 1]) throw DomainError("cycles are not disjoint at point " + std::to_string(from));
      seen[from - 1] = true;
      image[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(image));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = start; !seen[j]; j = image_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

FiniteGroupSymmetry::FiniteGroupSymmetry(std::vector<ComplexMatrix> u) : unitaries(std::move(u)) {
  for (std::size_t k = 0; k < unitaries.size(); ++k) {
    if (!all_finite(unitaries[k]) || !is_unitary(unitaries[k], 1e-10)) {
      throw DomainError("finite-group generator " + std::to_string(k) + " is not unitary to 1e-10");
    }
    if (unitaries[k].rows() != unitaries.front().rows()) {
      throw DimensionError("finite-group generators have different dimensions");
    }
  }
}

std::string ConstraintOrigin::label(const OperatorBasis* basis) const {
  if (kind == Kind::Observable) return "obs[" + std::to_string(index) + "]";
  std::string element = (basis != nullptr && basis_index < basis->labels.size())
                            ? basis->labels[basis_index]
                            : "O_" + std::to_string(basis_index + 1);
  switch (part) {
    case Part::Whole:
      return "lie[" + std::to_string(index) + "]:" + element;
    case Part::Hermitian:
      return "group[" + std::to_string(index) + "]:" + element + ":herm";
    case Part::AntiHermitian:
      return "group[" + std::to_string(index) + "]:" + element + ":antiherm";
  }
  return element;
}

std::vector<std::size_t> OrbitPartition::orbit_of() const {
  std::vector<std::size_t> out(m, 0);
  for (std::size_t l = 0; l < orbits.size(); ++l)
    for (std::size_t j : orbits[l]) out[j] = l;
  return out;
}

// ---------------------------------------------------------------------------
// Constraint compilation

ConstraintSet orthonormalize_constraints(const std::vector<HermitianOperator>& raw, std::size_t dim) {
  std::vector<ConstraintOrigin> origins(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) origins[j].basis_index = j;
  return orthonormalize_constraints(raw, origins, dim);
}

ConstraintSet orthonormalize_constraints(const std::vector<HermitianOperator>& raw,
                                         const std::vector<ConstraintOrigin>& origins,
                                         std::size_t dim) {
  if (origins.size() != raw.size()) {
    throw DimensionError("orthonormalize_constraints: origin count does not match operator count");
  }
  ConstraintSet out;
  out.dim = dim;
  for (std::size_t r = 0; r < raw.size(); ++r) {
    check_dim(raw[r].dim(), dim, "orthonormalize_constraints");
    ComplexMatrix v = raw[r].matrix();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out.operators) {
        const double overlap = (v.array() * q.matrix().array().conjugate()).sum().real();
        v -= overlap * q.matrix();
      }
    }
    const double norm = v.norm();
    if (norm <= kDropNorm) continue;
    out.operators.push_back(hermitian_part(v / norm));
    out.targets.push_back(0.0);
    out.provenance.push_back(origins[r]);
  }
  return out;
}

ConstraintSet compile_lie_constraints(const std::vector<HermitianOperator>& generators,
                                      const OperatorBasis& basis) {
  std::vector<HermitianOperator> raw;
  std::vector<ConstraintOrigin> origins;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    check_dim(generators[k].dim(), basis.dim, "compile_lie_constraints");
    const ComplexMatrix iq = kI * generators[k].matrix();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      raw.push_back(hermitian_part(commutator(iq, basis.elements[j].matrix())));
      origins.push_back({ConstraintOrigin::Kind::Symmetry, k, j, ConstraintOrigin::Part::Whole});
    }
  }
  return orthonormalize_constraints(raw, origins, basis.dim);
}

ConstraintSet compile_finite_group_constraints(const std::vector<ComplexMatrix>& unitaries,
                                               const OperatorBasis& basis) {
  std::vector<HermitianOperator> raw;
  std::vector<ConstraintOrigin> origins;
  for (std::size_t k = 0; k < unitaries.size(); ++k) {
    const ComplexMatrix& u = unitaries[k];
    if (u.rows() != u.cols()) throw DimensionError("compile_finite_group_constraints: non-square generator");
    check_dim(static_cast<std::size_t>(u.rows()), basis.dim, "compile_finite_group_constraints");
    if (!is_unitary(u, 1e-10)) {
      throw DomainError("compile_finite_group_constraints: generator " + std::to_string(k) +
                        " is not unitary");
    }
    const ComplexMatrix iu = kI * u;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const ComplexMatrix a = commutator(iu, basis.elements[j].matrix());
      raw.push_back(hermitian_part(a));
      origins.push_back({ConstraintOrigin::Kind::Symmetry, k, j, ConstraintOrigin::Part::Hermitian});
      raw.push_back(hermitian_part(-kI * a));
      origins.push_back({ConstraintOrigin::Kind::Symmetry, k, j, ConstraintOrigin::Part::AntiHermitian});
    }
  }
  return orthonormalize_constraints(raw, origins, basis.dim);
}

ConstraintSet compile_constraints(const SymmetrySpec& spec, const OperatorBasis& basis) {
  if (const auto* lie = std::get_if<LieSymmetry>(&spec)) {
    return compile_lie_constraints(lie->generators, basis);
  }
  if (const auto* group = std::get_if<FiniteGroupSymmetry>(&spec)) {
    return compile_finite_group_constraints(group->unitaries, basis);
  }
  throw DomainError("permutation symmetry compiles to an orbit partition, not operator constraints");
}

// ---------------------------------------------------------------------------
// Orbits

OrbitPartition orbits(const std::vector<Permutation>& permutations, std::size_t m) {
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : permutations) {
    if (g.size() != m) {
      throw DomainError("permutation acts on " + std::to_string(g.size()) + " points, expected " +
                        std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t a = find(j);
      const std::size_t b = find(g(j));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  OrbitPartition out;
  out.m = m;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t root = find(j);
    if (slot[root] == m) {
      slot[root] = out.orbits.size();
      out.orbits.emplace_back();
    }
    out.orbits[slot[root]].push_back(j);
  }
  for (const auto& orbit : out.orbits) out.degeneracies.push_back(orbit.size());
  return out;
}

// ---------------------------------------------------------------------------
// Commutant

std::size_t symmetry_dim(const SymmetrySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LieSymmetry>) {
          return s.generators.empty() ? 0 : s.generators.front().dim();
        } else if constexpr (std::is_same_v<T, FiniteGroupSymmetry>) {
          return s.unitaries.empty() ? 0 : static_cast<std::size_t>(s.unitaries.front().rows());
        } else {
          return s.generators.empty() ? 0 : s.generators.front().size();
        }
      },
      spec);
}

std::vector<HermitianOperator> commutant_basis(const SymmetrySpec& spec, std::size_t dim) {
  const std::vector<ComplexMatrix> generators = generator_matrices(spec);
  for (const auto& g : generators) check_dim(static_cast<std::size_t>(g.rows()), dim, "commutant_basis");
  if (dim == 1) return {HermitianOperator::identity(1)};
  const std::vector<HermitianOperator> herm = orthonormal_hermitian_basis(dim);
  if (generators.empty()) return herm;

  const RealMatrix map = commutation_map(herm, generators);
  const Eigen::JacobiSVD<RealMatrix> svd(map, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double cutoff = kNullspaceThreshold * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);

  std::vector<HermitianOperator> out;
  const RealMatrix& v = svd.matrixV();
  for (Index c = 0; c < v.cols(); ++c) {
    const double s = c < sv.size() ? sv(c) : 0.0;
    if (s > cutoff) continue;
    ComplexMatrix x = ComplexMatrix::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
    for (std::size_t j = 0; j < herm.size(); ++j) x += v(static_cast<Index>(j), c) * herm[j].matrix();
    out.push_back(hermitian_part(x));
  }
  return out;
}

HermitianOperator commutant_project(const HermitianOperator& a, const SymmetrySpec& spec) {
  const std::vector<HermitianOperator> basis = commutant_basis(spec, a.dim());
  HermitianOperator out = HermitianOperator::zero(a.dim());
  for (const auto& b : basis) out = out + hs_inner(b, a) * b;
  return out;
}

double invariance_residual(const DensityMatrix& rho, const SymmetrySpec& spec) {
  const auto m = rho.dim();
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        double worst = 0.0;
        if constexpr (std::is_same_v<T, LieSymmetry>) {
          for (const auto& q : s.generators) {
            check_dim(q.dim(), m, "invariance_residual");
            worst = std::max(worst, max_abs(commutator(rho.matrix(), q.matrix())));
          }
        } else if constexpr (std::is_same_v<T, FiniteGroupSymmetry>) {
          for (const auto& u : s.unitaries) {
            check_dim(static_cast<std::size_t>(u.rows()), m, "invariance_residual");
            worst = std::max(worst, max_abs(u * rho.matrix() * u.adjoint() - rho.matrix()));
          }
        } else {
          const ComplexMatrix off =
              rho.matrix() - ComplexMatrix(rho.matrix().diagonal().asDiagonal());
          if (max_abs(off) > 1e-12) {
            throw DomainError("invariance_residual: permutation symmetry needs a diagonal state");
          }
          for (const auto& g : s.generators) {
            check_dim(g.size(), m, "invariance_residual");
            for (std::size_t j = 0; j < m; ++j) {
              const auto a = static_cast<Index>(j);
              const auto b = static_cast<Index>(g(j));
              worst = std::max(worst, std::abs(rho(a, a).real() - rho(b, b).real()));
            }
          }
        }
        return worst;
      },
      spec);
}

}  // namespace symmax

// Copyright 2026 The mqc Authors
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

#include "mqc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mqc/error.hpp"

namespace mqc {

namespace {

void require_unit(const Vec3& n) {
  if (std::abs(std::sqrt(dot(n, n)) - 1.0) > 1e-10) {
    throw Error(ErrorCode::kNotUnit, "direction must be a unit vector");
  }
}

std::vector<Level> cluster_levels(const EigenSystem& es) {
  std::vector<std::size_t> order(es.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return es.values[i] < es.values[j]; });

  std::vector<Level> levels;
  double previous = 0.0;
  for (std::size_t k : order) {
    const double v = es.values[k];
    if (levels.empty() || v - previous > kLevelGapTol) levels.push_back(Level{0.0, {}});
    levels.back().indices.push_back(k);
    previous = v;
  }
  for (auto& level : levels) {
    double sum = 0.0;
    for (std::size_t k : level.indices) sum += es.values[k];
    level.value = sum / static_cast<double>(level.indices.size());
  }
  return levels;
}

double infer_spacing(const std::vector<Level>& levels) {
  double unit = 0.0;
  for (std::size_t a = 0; a < levels.size(); ++a)
    for (std::size_t b = a + 1; b < levels.size(); ++b) {
      const double diff = levels[b].value - levels[a].value;
      if (unit == 0.0 || diff < unit) unit = diff;
    }
  return unit == 0.0 ? 1.0 : unit;
}

}  // namespace

int Observable::max_order() const {
  if (lattice.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(lattice.begin(), lattice.end());
  return *hi - *lo;
}

Observable make_observable(ComplexMatrix matrix, EigenSystem eigensystem, double spacing_unit) {
  if (eigensystem.dim() != matrix.dim()) throw Error(ErrorCode::kDimMismatch, "observable");
  if (!(spacing_unit > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "spacing unit must be positive");
  }
  std::vector<Level> levels = cluster_levels(eigensystem);
  const double base = levels.front().value;

  std::vector<int> lattice(eigensystem.dim());
  for (const auto& level : levels) {
    const double steps = (level.value - base) / spacing_unit;
    const double rounded = std::round(steps);
    if (std::abs(level.value - base - rounded * spacing_unit) > kLatticeTol) {
      throw Error(ErrorCode::kNotIntegerSpaced,
                  "eigenvalue " + std::to_string(level.value) + " is off the lattice of unit " +
                      std::to_string(spacing_unit));
    }
    if (rounded > kMaxCoherenceOrder) {
      throw Error(ErrorCode::kNotIntegerSpaced, "coherence order range exceeds 4096");
    }
    for (std::size_t k : level.indices) lattice[k] = static_cast<int>(rounded);
  }
  return Observable{std::move(matrix), std::move(eigensystem), std::move(levels), spacing_unit,
                    std::move(lattice)};
}

Observable make_observable(ComplexMatrix matrix, EigenSystem eigensystem) {
  const double unit = infer_spacing(cluster_levels(eigensystem));
  return make_observable(std::move(matrix), std::move(eigensystem), unit);
}

Observable reference_basis(const ComplexMatrix& a) {
  EigenSystem es = eigh(a);
  return make_observable(a, std::move(es));
}

ComplexMatrix spin_component(int n, int axis) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "spin_component needs n >= 1");
  if (n > kMaxFamilyQubits) throw Error(ErrorCode::kTooLarge, "spin_component");
  const ComplexMatrix sigma = axis == 0 ? pauli_x() : axis == 1 ? pauli_y() : pauli_z();
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix total(d);
  for (int site = 0; site < n; ++site) {
    ComplexMatrix term = ComplexMatrix::identity(1);
    for (int k = 0; k < n; ++k) term = kron(term, k == site ? sigma : ComplexMatrix::identity(2));
    total += term;
  }
  total *= 0.5;
  return total;
}

Observable collective_spin(int n, const Vec3& direction) {
  require_unit(direction);
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "collective_spin needs n >= 1");
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix a(d);
  for (int axis = 0; axis < 3; ++axis) {
    if (direction[axis] != 0.0) a += direction[axis] * spin_component(n, axis);
  }
  return reference_basis(a);
}

Observable qubit_generator(const Vec3& direction) { return collective_spin(1, direction); }

std::vector<double> ising_diagonal(int n, double coupling) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "ising_hamiltonian needs n >= 2");
  if (n > 20) throw Error(ErrorCode::kTooLarge, "ising_hamiltonian");
  const std::size_t d = std::size_t{1} << n;
  std::vector<double> diag(d);
  for (std::size_t b = 0; b < d; ++b) {
    // sum_{j<l} s_j s_l = (M^2 - N) / 2 with M the magnetisation.
    int magnetisation = 0;
    for (int q = 0; q < n; ++q) magnetisation += ((b >> q) & 1U) ? -1 : 1;
    const double pair_sum = 0.5 * (magnetisation * magnetisation - n);
    diag[b] = coupling / n * pair_sum;
  }
  return diag;
}

Observable ising_hamiltonian(int n, double coupling) {
  const std::vector<double> diag = ising_diagonal(n, coupling);
  const std::size_t d = diag.size();
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });
  EigenSystem es{std::vector<double>(d), ComplexMatrix(d)};
  for (std::size_t k = 0; k < d; ++k) {
    es.values[k] = diag[order[k]];
    es.vectors(order[k], k) = 1.0;
  }
  const double unit = coupling == 0.0 ? 1.0 : std::abs(2.0 * coupling / n);
  return make_observable(ComplexMatrix::diagonal(std::span<const double>(diag)), std::move(es),
                         unit);
}

}  // namespace mqc

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

#pragma once

#include <vector>

#include "mqc/hermitian.hpp"
#include "mqc/states.hpp"

namespace mqc {

inline constexpr double kLevelGapTol = 1e-9;
inline constexpr double kLatticeTol = 1e-7;
inline constexpr int kMaxCoherenceOrder = 4096;

struct Level {
  double value = 0.0;
  std::vector<std::size_t> indices;  // columns of the eigenvector matrix
};

// A generator together with its reference basis: eigenvectors grouped into
// levels whose pairwise differences are integer multiples of spacing_unit.
// The coherence order between reference vectors j and l is
// lattice[j] - lattice[l].
struct Observable {
  ComplexMatrix matrix;
  EigenSystem eigensystem;
  std::vector<Level> levels;
  double spacing_unit = 1.0;
  std::vector<int> lattice;  // per eigenvector, integer position of its level

  std::size_t dim() const { return matrix.dim(); }
  int order(std::size_t j, std::size_t l) const { return lattice[j] - lattice[l]; }
  // (lambda_max - lambda_min) / spacing_unit
  int max_order() const;
};

// Groups the eigensystem into levels and validates the integer-spacing
// condition. Throws NotIntegerSpaced.
Observable make_observable(ComplexMatrix matrix, EigenSystem eigensystem);

// As make_observable, but with a caller-supplied lattice unit.
Observable make_observable(ComplexMatrix matrix, EigenSystem eigensystem, double spacing_unit);

Observable reference_basis(const ComplexMatrix& a);

// (1/2) sum_l sigma_l^k embedded on qubit l, for k = x, y, z.
ComplexMatrix spin_component(int n, int axis);
Observable collective_spin(int n, const Vec3& direction);
Observable qubit_generator(const Vec3& direction);

// Diagonal of (J/N) sum_{j<l} s_j s_l, s = +1 for |0> and -1 for |1>.
std::vector<double> ising_diagonal(int n, double coupling);
Observable ising_hamiltonian(int n, double coupling);

}  // namespace mqc

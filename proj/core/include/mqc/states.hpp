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

#include <array>
#include <cstdint>
#include <string_view>

#include "mqc/matrix.hpp"

namespace mqc {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);

// Polar form of a Bloch vector: radius r in (0, 1), polar angle theta and
// azimuth phi in radians.
struct BlochVector {
  double r = 0.5;
  double theta = 0.0;
  double phi = 0.0;

  Vec3 direction() const;
  Vec3 cartesian() const;
};

// Correlation triple (a_x, a_y, a_z) of a Bell-diagonal two-qubit state.
struct BellDiagonalParams {
  Vec3 a{0.0, 0.0, 0.0};
};

enum class Family { kEqualSuperposition, kGhz, kW };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

// (1 - p)/d * 1 + p |psi><psi| with |psi> from `family` on n qubits.
struct MixedFamilyParams {
  int n = 1;
  double p = 0.5;
  Family family = Family::kEqualSuperposition;

  std::size_t dim() const { return std::size_t{1} << n; }
};

inline constexpr int kMaxFamilyQubits = 12;

ComplexMatrix qubit_state(const BlochVector& b);

// Eigenvalues v_1..v_4 of the Bell-diagonal state, ordered as the
// singlet, |psi+>, |phi+>, |phi-> projectors.
std::array<double, 4> bell_eigenvalues(const BellDiagonalParams& params);
ComplexMatrix bell_diagonal(const BellDiagonalParams& params);

ComplexMatrix family_state(const MixedFamilyParams& params);

enum class PureFamily { kPlus, kGhz, kW };

// Big-endian qubit order: qubit 1 is the most significant bit of the index.
ComplexVector pure_vector(PureFamily family, int n);

// Full-rank density matrix from a seeded complex Gaussian stream.
ComplexMatrix random_density(std::size_t dim, std::uint64_t seed);

}  // namespace mqc

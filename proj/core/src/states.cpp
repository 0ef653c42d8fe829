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

#include "mqc/states.hpp"

#include <cmath>
#include <random>
#include <string>

#include "mqc/error.hpp"

namespace mqc {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 BlochVector::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Vec3 BlochVector::cartesian() const {
  const Vec3 n = direction();
  return {r * n[0], r * n[1], r * n[2]};
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kEqualSuperposition: return "eqn";
    case Family::kGhz: return "ghz";
    case Family::kW: return "w";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "eqn") return Family::kEqualSuperposition;
  if (name == "ghz") return Family::kGhz;
  if (name == "w") return Family::kW;
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

ComplexMatrix qubit_state(const BlochVector& b) {
  if (!(b.r > 0.0 && b.r < 1.0)) {
    throw Error(ErrorCode::kInvalidBloch, "Bloch radius must satisfy 0 < r < 1");
  }
  const Vec3 v = b.cartesian();
  ComplexMatrix rho = ComplexMatrix::identity(2);
  rho += v[0] * pauli_x();
  rho += v[1] * pauli_y();
  rho += v[2] * pauli_z();
  rho *= 0.5;
  return rho;
}

std::array<double, 4> bell_eigenvalues(const BellDiagonalParams& params) {
  const auto [ax, ay, az] = params.a;
  return {0.25 * (1.0 - ax - ay - az), 0.25 * (1.0 + ax + ay - az),
          0.25 * (1.0 + ax - ay + az), 0.25 * (1.0 - ax + ay + az)};
}

ComplexMatrix bell_diagonal(const BellDiagonalParams& params) {
  for (double aj : params.a) {
    if (!(aj >= -1.0 && aj <= 1.0)) {
      throw Error(ErrorCode::kUnphysical, "correlation coefficients must lie in [-1, 1]");
    }
  }
  for (double v : bell_eigenvalues(params)) {
    if (v < -1e-12) throw Error(ErrorCode::kUnphysical, "negative Bell-diagonal eigenvalue");
  }
  const ComplexMatrix paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
  ComplexMatrix rho = ComplexMatrix::identity(4);
  for (int j = 0; j < 3; ++j) rho += params.a[j] * kron(paulis[j], paulis[j]);
  rho *= 0.25;
  return rho;
}

ComplexVector pure_vector(PureFamily family, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "pure_vector needs n >= 1");
  if (n > 30) throw Error(ErrorCode::kTooLarge, "pure_vector n too large");
  const std::size_t d = std::size_t{1} << n;
  ComplexVector v(d);
  switch (family) {
    case PureFamily::kPlus: {
      const double amp = 1.0 / std::sqrt(static_cast<double>(d));
      for (auto& z : v) z = amp;
      break;
    }
    case PureFamily::kGhz:
      v[0] = 1.0 / std::sqrt(2.0);
      v[d - 1] += 1.0 / std::sqrt(2.0);
      break;
    case PureFamily::kW: {
      const double amp = 1.0 / std::sqrt(static_cast<double>(n));
      for (int l = 0; l < n; ++l) v[std::size_t{1} << (n - 1 - l)] = amp;
      break;
    }
  }
  return v;
}

ComplexMatrix family_state(const MixedFamilyParams& params) {
  if (params.n < 1) throw Error(ErrorCode::kInvalidArgument, "family_state needs n >= 1");
  if (params.n > kMaxFamilyQubits) {
    throw Error(ErrorCode::kTooLarge, "family_state supports at most 12 qubits");
  }
  if (!(params.p > 0.0 && params.p < 1.0)) {
    throw Error(ErrorCode::kInvalidP, "mixing parameter must satisfy 0 < p < 1");
  }
  PureFamily pure = PureFamily::kPlus;
  if (params.family == Family::kGhz) pure = PureFamily::kGhz;
  if (params.family == Family::kW) pure = PureFamily::kW;

  const std::size_t d = params.dim();
  ComplexMatrix rho = ComplexMatrix::identity(d) * ((1.0 - params.p) / static_cast<double>(d));
  rho += params.p * outer(pure_vector(pure, params.n));
  return rho;
}

ComplexMatrix random_density(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw Error(ErrorCode::kInvalidArgument, "random_density needs dim >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim);
  for (auto& z : g.entries()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  rho += ComplexMatrix::identity(dim) * (1e-6 / static_cast<double>(dim));
  rho *= 1.0 / rho.trace().real();
  // Exact Hermiticity after the rescaling.
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

}  // namespace mqc

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

#include <span>
#include <vector>

#include "mqc/matrix.hpp"

namespace mqc {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
// Eigenvalues in [-kNegativeClamp, 0) are roundoff and are set to zero.
inline constexpr double kNegativeClamp = 1e-12;
// Eigenvalues with modulus at or below this are treated as exact zeros before
// fractional powering, so that roundoff in a null space cannot leak into p^s.
inline constexpr double kZeroSnap = 1e-14;

// Eigenvalues ascending; vectors(:, k) is the eigenvector for values[k].
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;

  std::size_t dim() const noexcept { return values.size(); }
  ComplexVector vector(std::size_t k) const;
};

struct JacobiOptions {
  double relative_tolerance = 1e-13;
  int max_sweeps = 60;
};

// Cyclic complex Jacobi diagonalisation of a Hermitian matrix.
// Throws NotHermitian if ||M - M^dagger||_max > 1e-10 and NoConvergence if
// the off-diagonal Frobenius norm does not fall below tol * ||M||_F.
EigenSystem eigh(const ComplexMatrix& m, JacobiOptions options = {});

// eigh for density-like operators: eigenvalues are clamped and snapped as
// described above. Throws NotPositive below -kNegativeClamp.
EigenSystem eigh_psd(const ComplexMatrix& m);

// V diag(values) V^dagger
ComplexMatrix reconstruct(const ComplexMatrix& vectors, std::span<const double> values);
ComplexMatrix reconstruct(const ComplexMatrix& vectors, std::span<const Complex> values);

// V^dagger M V: the matrix of M in the basis given by the columns of V.
ComplexMatrix to_basis(const ComplexMatrix& m, const ComplexMatrix& vectors);
// V M V^dagger
ComplexMatrix from_basis(const ComplexMatrix& m, const ComplexMatrix& vectors);

// rho^s for a positive semidefinite rho and s in (0, 1].
ComplexMatrix matrix_power(const ComplexMatrix& rho, double s);
ComplexMatrix matrix_power(const EigenSystem& psd, double s);

// exp(-i phi A)
ComplexMatrix unitary_from_generator(const ComplexMatrix& a, double phi);
ComplexMatrix unitary_from_generator(const EigenSystem& a, double phi);

// U rho U^dagger. Throws NotUnitary if U fails the 1e-10 check.
ComplexMatrix conjugate(const ComplexMatrix& rho, const ComplexMatrix& u);

// Tr(A^dagger B)
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Sum of singular values.
double trace_norm(const ComplexMatrix& a);

}  // namespace mqc

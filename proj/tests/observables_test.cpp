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

#include <gtest/gtest.h>

#include <cmath>

#include "mqc/error.hpp"
#include "support/test_support.hpp"

namespace mqc {
namespace {

std::vector<std::size_t> multiplicities(const Observable& a) {
  std::vector<std::size_t> out;
  for (const auto& level : a.levels) out.push_back(level.indices.size());
  return out;
}

TEST(CollectiveSpin, SingleQubit) {
  const Observable a = collective_spin(1, {0, 0, 1});
  EXPECT_LE(max_abs_diff(a.matrix, 0.5 * pauli_z()), 1e-15);
  ASSERT_EQ(a.levels.size(), 2u);
  EXPECT_NEAR(a.levels[0].value, -0.5, 1e-15);
  EXPECT_NEAR(a.levels[1].value, 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(a.spacing_unit, 1.0);
  EXPECT_EQ(a.max_order(), 1);
}

TEST(CollectiveSpin, BinomialDegeneracies) {
  const Observable a = collective_spin(4, {1, 0, 0});
  EXPECT_EQ(multiplicities(a), (std::vector<std::size_t>{1, 4, 6, 4, 1}));
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(a.levels[k].value, k - 2.0, 1e-12);

  const Observable z2 = collective_spin(2, {0, 0, 1});
  EXPECT_EQ(multiplicities(z2), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_NEAR(z2.levels[0].value, -1.0, 1e-15);
}

TEST(CollectiveSpin, CommutationRelations) {
  for (int n = 1; n <= 5; ++n) {
    const ComplexMatrix sx = spin_component(n, 0), sy = spin_component(n, 1),
                        sz = spin_component(n, 2);
    const Complex i(0, 1);
    EXPECT_LE(max_abs_diff(commutator(sx, sy), i * sz), 1e-10);
    EXPECT_LE(max_abs_diff(commutator(sy, sz), i * sx), 1e-10);
    EXPECT_LE(max_abs_diff(commutator(sz, sx), i * sy), 1e-10);
  }
}

TEST(CollectiveSpin, TwoQubitGeneratorSpectrum) {
  const Observable a = collective_spin(2, testing::random_direction(4));
  ASSERT_EQ(a.levels.size(), 3u);
  EXPECT_EQ(multiplicities(a), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_NEAR(a.levels[0].value, -1.0, 1e-12);
  EXPECT_NEAR(a.levels[1].value, 0.0, 1e-12);
  EXPECT_NEAR(a.levels[2].value, 1.0, 1e-12);
  EXPECT_EQ(a.max_order(), 2);
}

TEST(CollectiveSpin, RejectsNonUnitDirection) {
  try {
    collective_spin(2, {1, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotUnit);
  }
}

TEST(QubitGenerator, Properties) {
  const Observable x = qubit_generator({1, 0, 0});
  const ComplexVector v0 = x.eigensystem.vector(0), v1 = x.eigensystem.vector(1);
  EXPECT_NEAR(std::abs(v0[0]), M_SQRT1_2, 1e-14);
  EXPECT_NEAR(std::abs(v0[1]), M_SQRT1_2, 1e-14);
  EXPECT_NEAR(std::abs(v0[0] + v0[1]), 0.0, 1e-14);  // (1, -1) / sqrt 2 for -1/2
  EXPECT_NEAR(std::abs(v1[0] - v1[1]), 0.0, 1e-14);
  for (int seed = 0; seed < 5; ++seed) {
    const Observable a = qubit_generator(testing::random_direction(seed));
    EXPECT_NEAR(std::abs(a.matrix.trace()), 0.0, 1e-15);
    EXPECT_NEAR((a.matrix * a.matrix).trace().real(), 0.5, 1e-14);
    EXPECT_NEAR(a.levels[0].value, -0.5, 1e-14);
    EXPECT_NEAR(a.levels[1].value, 0.5, 1e-14);
  }
}

TEST(Ising, Diagonal) {
  const double j = 1.7;
  const std::vector<double> two = ising_diagonal(2, j);
  EXPECT_NEAR(two[0], j / 2, 1e-15);
  EXPECT_NEAR(two[1], -j / 2, 1e-15);
  EXPECT_NEAR(two[2], -j / 2, 1e-15);
  EXPECT_NEAR(two[3], j / 2, 1e-15);
  EXPECT_NEAR(ising_diagonal(3, 1.0)[0], 1.0, 1e-15);

  for (int n = 2; n <= 7; ++n) {
    const Observable h = ising_hamiltonian(n, 1.0);
    EXPECT_NEAR(std::abs(h.matrix.trace()), 0.0, 1e-12);
    EXPECT_NEAR(h.spacing_unit, 2.0 / n, 1e-15);
    // Brute-force pair sum.
    const std::vector<double> diag = ising_diagonal(n, 1.0);
    for (std::size_t b = 0; b < diag.size(); ++b) {
      double sum = 0.0;
      for (int q = 0; q < n; ++q)
        for (int r = q + 1; r < n; ++r) {
          const int sq = ((b >> (n - 1 - q)) & 1) ? -1 : 1;
          const int sr = ((b >> (n - 1 - r)) & 1) ? -1 : 1;
          sum += sq * sr;
        }
      EXPECT_NEAR(diag[b], sum / n, 1e-14);
    }
  }
}

TEST(Ising, ZeroCouplingIsSingleLevel) {
  const Observable h = ising_hamiltonian(3, 0.0);
  EXPECT_EQ(h.levels.size(), 1u);
  EXPECT_EQ(h.max_order(), 0);
}

TEST(ReferenceBasis, Examples) {
  const Observable z = reference_basis(0.5 * pauli_z());
  EXPECT_DOUBLE_EQ(z.spacing_unit, 1.0);
  EXPECT_EQ(z.levels.size(), 2u);

  const Observable s3 = reference_basis(spin_component(3, 2));
  EXPECT_EQ(s3.levels.size(), 4u);
  EXPECT_NEAR(s3.levels.front().value, -1.5, 1e-14);
  EXPECT_NEAR(s3.spacing_unit, 1.0, 1e-12);

  const std::vector<double> bad{0.0, 0.5, 1.3};
  try {
    reference_basis(ComplexMatrix::diagonal(bad));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIntegerSpaced);
  }

  const std::vector<double> scaled{-0.3, 0.0, 0.6};
  const Observable s = reference_basis(ComplexMatrix::diagonal(scaled));
  EXPECT_NEAR(s.spacing_unit, 0.3, 1e-15);
  EXPECT_EQ(s.max_order(), 3);
}

TEST(ReferenceBasis, LatticeOrders) {
  const Observable a = collective_spin(3, testing::random_direction(9));
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t l = 0; l < a.dim(); ++l) {
      const double diff = a.eigensystem.values[j] - a.eigensystem.values[l];
      EXPECT_NEAR(diff, a.order(j, l) * a.spacing_unit, 1e-9);
    }
}

}  // namespace
}  // namespace mqc

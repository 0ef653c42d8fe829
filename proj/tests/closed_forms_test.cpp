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

#include "mqc/closed_forms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mqc/error.hpp"
#include "mqc/quantifiers.hpp"
#include "support/test_support.hpp"

namespace mqc {
namespace {

using testing::rel_err;

constexpr double kPi = std::numbers::pi;

TEST(SingleQubitForms, ParallelVanishes) {
  const BlochVector b{0.4, 0.7, 1.2};
  const ClosedFormReport rep = single_qubit_forms(b, b.direction(), 0.3);
  EXPECT_NEAR(rep.get("F"), 0.0, 1e-15);
  EXPECT_NEAR(rep.get("I[1]"), 0.0, 1e-15);
  EXPECT_NEAR(rep.get("I[0]"), rep.get("c_alpha") * rep.get("c_one_minus_alpha"), 1e-15);
}

TEST(SingleQubitForms, PerpendicularHalf) {
  const ClosedFormReport rep = single_qubit_forms({0.6, kPi / 2, 0.0}, {0, 0, 1}, 0.5);
  const double c = 1.0 / (std::pow(2.0, -0.5) * (std::sqrt(1.6) + std::sqrt(0.4)));
  EXPECT_NEAR(rep.get("F"), 2 * c * c - 1, 1e-15);
  const ClosedFormReport half = single_qubit_forms({0.5, kPi / 2, 0.0}, {0, 0, 1}, 0.5);
  EXPECT_NEAR(half.get("I_half"), 0.25 * (1 - std::sqrt(0.75)), 1e-15);
}

TEST(SingleQubitForms, MatchesEngine) {
  for (double r : {0.1, 0.5, 0.9})
    for (int seed = 0; seed < 3; ++seed) {
      const BlochVector b{r, 0.3 + seed, 2.0 * seed};
      const Vec3 n = testing::random_direction(seed + 7);
      const Observable a = qubit_generator(n);
      const ComplexMatrix rho = qubit_state(b);
      for (double alpha : {0.15, 0.5, 0.85}) {
        const ClosedFormReport rep = single_qubit_forms(b, n, alpha);
        const MqiSpectrum spec = mqi_spectrum(rho, a, alpha);
        for (int m = -1; m <= 1; ++m)
          EXPECT_LE(rel_err(spec.at(m).real(), rep.get(mqi_key(m))), 1e-12);
        EXPECT_LE(rel_err(second_moment(spec), rep.get("F")), 1e-12);
        EXPECT_LE(rel_err(lower_quantifier(rho, a.matrix), rep.get("IL")), 1e-12);
        EXPECT_LE(rel_err(qfi(rho, a.matrix), rep.get("FQ")), 1e-12);
        EXPECT_LE(rel_err(variance(rho, a.matrix), rep.get("V")), 1e-12);
        EXPECT_LE(rel_err(wydsi(rho, a.matrix, 0.5), rep.get("I_half")), 1e-12);
      }
    }
}

TEST(BellDiagonalForms, AxisCases) {
  const BellDiagonalParams params{{0.2, 0.1, -0.3}};
  const ClosedFormReport z = bell_diagonal_forms(params, {0, 0, 1}, 0.4);
  const double ex = z.get("eta_alpha_x"), ey = z.get("eta_alpha_y");
  const double fx = z.get("eta_one_minus_alpha_x"), fy = z.get("eta_one_minus_alpha_y");
  EXPECT_NEAR(z.get("F"), (ex - ey) * (fx - fy), 1e-15);
  EXPECT_NEAR(z.get("F_Sz"), z.get("F"), 1e-15);
  EXPECT_NEAR(bell_diagonal_forms(params, {1, 0, 0}, 0.4).get("F"), z.get("F_Sx"), 1e-15);
  EXPECT_NEAR(bell_diagonal_forms(params, {0, 1, 0}, 0.4).get("F"), z.get("F_Sy"), 1e-15);
}

TEST(BellDiagonalForms, IsotropicHasNoCoherence) {
  for (double a : {-0.3, 0.2, 0.3}) {
    const ClosedFormReport rep =
        bell_diagonal_forms({{a, a, a}}, testing::random_direction(3), 0.35);
    EXPECT_NEAR(rep.get("F"), 0.0, 1e-15);
  }
}

TEST(BellDiagonalForms, MatchesEngine) {
  const std::vector<Vec3> params{{0.2, 0.1, -0.3}, {-0.5, 0.3, 0.1}, {0.6, -0.6, 0.2}, {-0.8, -0.1, -0.1}};
  for (const Vec3& a : params)
    for (int seed = 0; seed < 4; ++seed) {
      const Vec3 n = seed == 0 ? Vec3{1, 0, 0} : testing::random_direction(seed);
      const Observable gen = collective_spin(2, n);
      const ComplexMatrix rho = bell_diagonal({a});
      for (double alpha : {0.1, 0.4, 0.75}) {
        const ClosedFormReport rep = bell_diagonal_forms({a}, n, alpha);
        const MqiSpectrum spec = mqi_spectrum(rho, gen, alpha);
        EXPECT_LE(rel_err(second_moment(spec), rep.get("F")), 1e-12);
        EXPECT_LE(rel_err(spec.c_alpha, rep.get("c_alpha")), 1e-12);
        EXPECT_LE(rel_err(lower_quantifier(rho, gen.matrix), rep.get("IL")), 1e-12);
        EXPECT_LE(rel_err(qfi(rho, gen.matrix), rep.get("FQ")), 1e-12);
        EXPECT_LE(rel_err(variance(rho, gen.matrix), rep.get("V")), 1e-12);
        EXPECT_LE(rel_err(wydsi(rho, gen.matrix, 0.5), rep.get("I_half")), 1e-12);
      }
    }
}

TEST(BellDiagonalForms, Errors) {
  EXPECT_THROW(bell_diagonal_forms({{1, 1, 1}}, {0, 0, 1}, 0.3), Error);
  EXPECT_THROW(bell_diagonal_forms({{0, 0, 0}}, {0, 0, 2}, 0.3), Error);
  EXPECT_THROW(bell_diagonal_forms({{0, 0, 0}}, {0, 0, 1}, 1.3), Error);
}

TEST(FamilyForms, GhzNearPure) {
  // xi_alpha approaches 1 only like (1 - p)^alpha, so the limit is probed much
  // closer to p = 1 than 0.999.
  for (int n : {2, 3, 5})
    for (double alpha : {0.3, 0.5}) {
      const ClosedFormReport rep = family_forms({n, 1.0 - 1e-12, Family::kGhz}, alpha);
      EXPECT_NEAR(rep.get("F"), n * n, 1e-2 * n * n);
      double previous = 0.0;
      for (double p : {0.9, 0.99, 0.999, 0.9999}) {
        const double f = family_forms({n, p, Family::kGhz}, alpha).get("F");
        EXPECT_GT(f, previous);
        EXPECT_LT(f, n * n);
        previous = f;
      }
    }
}

TEST(FamilyForms, EqnDegeneracyProfile) {
  EXPECT_EQ(block_degeneracy(4, 0), 70.0);
  EXPECT_EQ(block_degeneracy(4, 1), 56.0);
  EXPECT_EQ(block_degeneracy(4, 4), 1.0);
  EXPECT_EQ(block_degeneracy(4, 5), 0.0);
  const ClosedFormReport rep = family_forms({4, 0.3, Family::kEqualSuperposition}, 0.4);
  const double ratio = rep.get("I[1]") / block_degeneracy(4, 1);
  for (int m = 1; m <= 4; ++m) {
    EXPECT_NEAR(rep.get(mqi_key(m)) / block_degeneracy(4, m), ratio, 1e-15);
    EXPECT_EQ(rep.get(mqi_key(m)), rep.get(mqi_key(-m)));
  }
}

TEST(FamilyForms, MatchesEngine) {
  for (Family f : {Family::kEqualSuperposition, Family::kGhz, Family::kW})
    for (int n = 2; n <= 4; ++n)
      for (double p : {0.1, 0.5, 0.9}) {
        const ComplexMatrix rho = family_state({n, p, f});
        const Observable gen = collective_spin(n, f == Family::kW ? Vec3{1, 0, 0} : Vec3{0, 0, 1});
        for (double alpha : {0.25, 0.5, 0.7}) {
          const ClosedFormReport rep = family_forms({n, p, f}, alpha);
          const MqiSpectrum spec = mqi_spectrum(rho, gen, alpha);
          EXPECT_LE(rel_err(second_moment(spec), rep.get("F")), 1e-11);
          if (f != Family::kW)
            for (int m = -n; m <= n; ++m)
              EXPECT_LE(std::abs(spec.at(m).real() - rep.get(mqi_key(m))), 1e-12)
                  << to_string(f) << " n=" << n << " m=" << m;
          EXPECT_LE(rel_err(lower_quantifier(rho, gen.matrix), rep.get("IL")), 1e-11);
          EXPECT_LE(rel_err(qfi(rho, gen.matrix), rep.get("FQ")), 1e-11);
          EXPECT_LE(rel_err(variance(rho, gen.matrix), rep.get("V")), 1e-11);
          EXPECT_LE(rel_err(wydsi(rho, gen.matrix, 0.5), rep.get("I_half")), 1e-11);
        }
      }
}

TEST(FamilyForms, GhzOverEqnIsN) {
  for (int n = 1; n <= 6; ++n)
    for (double p : {0.2, 0.6})
      for (double alpha : {0.2, 0.5}) {
        const double ratio = family_forms({n, p, Family::kGhz}, alpha).get("F") /
                             family_forms({n, p, Family::kEqualSuperposition}, alpha).get("F");
        EXPECT_NEAR(ratio, n, 1e-10 * n);
      }
}

TEST(FamilyForms, Errors) {
  EXPECT_THROW(family_forms({13, 0.5, Family::kGhz}, 0.3), Error);
  EXPECT_THROW(family_forms({3, 1.0, Family::kGhz}, 0.3), Error);
  EXPECT_THROW(family_forms({3, 0.5, Family::kGhz}, 0.0), Error);
  EXPECT_THROW(family_forms({3, 0.5, Family::kGhz}, 0.3).get("no_such_entry"), Error);
}

}  // namespace
}  // namespace mqc

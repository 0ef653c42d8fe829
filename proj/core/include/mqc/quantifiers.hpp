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

#include "mqc/coherence.hpp"

namespace mqc {

inline constexpr double kRadicandClamp = 1e-12;
inline constexpr double kRadicandError = 1e-9;
inline constexpr double kQfiDenominatorFloor = 1e-14;
inline constexpr double kFullRankFloor = 1e-12;
inline constexpr double kBoundSlack = 1e-9;

// Wigner-Yanase-Dyson skew information, eigenbasis double sum.
double wydsi(const ComplexMatrix& rho, const ComplexMatrix& a, double alpha);
double wydsi(const EigenSystem& rho, const ComplexMatrix& a, double alpha);
// -1/2 Tr([A, rho^alpha][A, rho^(1-alpha)])
double wydsi_commutator(const ComplexMatrix& rho, const ComplexMatrix& a, double alpha);

// -1/4 Tr([rho, A]^2)
double lower_quantifier(const ComplexMatrix& rho, const ComplexMatrix& a);
double lower_quantifier(const EigenSystem& rho, const ComplexMatrix& a);

// Quantum Fisher information normalised to the variance on pure states.
double qfi(const ComplexMatrix& rho, const ComplexMatrix& a);
double qfi(const EigenSystem& rho, const ComplexMatrix& a);

double variance(const ComplexMatrix& rho, const ComplexMatrix& a);

// sqrt(V^2 - (V - I_alpha)^2)
double alpha_variance(const ComplexMatrix& rho, const ComplexMatrix& a, double alpha);
double alpha_variance_from(double variance, double skew);

// Tr(A^2 rho ln rho) - Tr(A rho A ln rho). Throws SingularState below 1e-12.
double kl_limit_coefficient(const ComplexMatrix& rho, const ComplexMatrix& a);

struct BoundReport {
  double alpha = 0.5;
  double lower_il_term = 0.0;  // 2 alpha (1 - alpha) I^L
  double f_over_4cc = 0.0;     // F / (4 c_alpha c_{1-alpha}), in units of A
  double wysi = 0.0;           // I_{1/2}
  double wydsi = 0.0;          // I_alpha
  double v_alpha = 0.0;
  double v_half = 0.0;
  double variance = 0.0;
  double qfi = 0.0;
  double second_moment = 0.0;  // F in units of the spacing
  double c_alpha = 1.0;
  double c_one_minus_alpha = 1.0;
  // lower <= F/4cc <= I_1/2 <= V_1/2; lower <= F/4cc <= V_alpha <= V_1/2;
  // F/4cc <= I_1/2 <= F_Q <= 2 I_1/2.
  std::array<bool, 3> chain_ok{false, false, false};

  double scale() const;
};

BoundReport bound_report(const ComplexMatrix& rho, const Observable& a, double alpha);

// Evaluates the three chains on already populated fields.
std::array<bool, 3> check_chains(const BoundReport& r);

}  // namespace mqc

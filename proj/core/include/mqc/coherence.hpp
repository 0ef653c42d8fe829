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

#include <map>

#include "mqc/hermitian.hpp"
#include "mqc/observables.hpp"

namespace mqc {

// Blocks whose largest entry is at or below this are treated as absent.
inline constexpr double kBlockZeroTol = 1e-13;
inline constexpr double kImaginaryTol = 1e-9;
// Relative purities at or below this make the Renyi divergence infinite.
inline constexpr double kPurityFloor = 1e-14;

// c_alpha rho^alpha with c_alpha = 1 / Tr rho^alpha.
struct NormalizedPower {
  double alpha = 0.5;
  double c_alpha = 1.0;
  ComplexMatrix matrix;
};

void require_open_alpha(double alpha);

// Tr rho^s from a clamped spectrum (0^s = 0).
double power_trace(const EigenSystem& rho, double s);

NormalizedPower normalized_power(const ComplexMatrix& rho, double alpha);
NormalizedPower normalized_power(const EigenSystem& rho, double alpha);

// Sparse coherence-order blocks, stored in the computational basis.
struct CoherenceDecomposition {
  double alpha = 0.5;
  std::map<int, ComplexMatrix> orders;

  // Zero matrix when the order is absent.
  ComplexMatrix block(int m) const;
  ComplexMatrix sum() const;
};

CoherenceDecomposition decompose(const NormalizedPower& np, const Observable& a);

// Entry-wise projection of M onto order m in the reference basis of `a`,
// returned in the computational basis.
ComplexMatrix order_block(const ComplexMatrix& m, const Observable& a, int order);

struct MqiSpectrum {
  double alpha = 0.5;
  // Every order in [-m_max, m_max] is present, including zeros.
  std::map<int, Complex> intensities;
  double c_alpha = 1.0;
  double c_one_minus_alpha = 1.0;
  double spacing_unit = 1.0;

  int m_max() const;
  Complex at(int m) const;
  Complex total() const;
};

MqiSpectrum mqi_spectrum(const ComplexMatrix& rho, const Observable& a, double alpha);
MqiSpectrum mqi_spectrum(const EigenSystem& rho, const Observable& a, double alpha);

// 2 sum_m m^2 I_m with m counted in units of spacing_unit.
// Throws ImaginaryResidue if the imaginary part exceeds 1e-9.
double second_moment(const MqiSpectrum& spec);

// Tr(rho^alpha sigma^(1-alpha)) for alpha in [0, 1], with 0^0 = 0.
double relative_purity(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha);
double relative_purity(const EigenSystem& rho, const EigenSystem& sigma, double alpha);

// ln(f_alpha) / (alpha - 1); +infinity when f_alpha <= 1e-14.
double renyi_relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha);

// ln(Tr rho^alpha) / (1 - alpha)
double renyi_entropy(const ComplexMatrix& rho, double alpha);
double renyi_entropy(const EigenSystem& rho, double alpha);

// D_alpha(rho || rho_phi) rebuilt from the spectrum and the two Renyi
// entropies. The phase of order m is m * spacing_unit * phi.
double d_alpha_from_spectrum(const MqiSpectrum& spec, double s_alpha, double s_one_minus_alpha,
                             double phi);

// Discrete Fourier inversion of phi -> f_alpha(rho, rho_phi) over `samples`
// equally spaced angles. Throws Undersampled below 2 m_max + 1.
MqiSpectrum fourier_extract(const ComplexMatrix& rho, const Observable& a, double alpha,
                            int samples);
MqiSpectrum fourier_extract(const ComplexMatrix& rho, const Observable& a, double alpha);

}  // namespace mqc

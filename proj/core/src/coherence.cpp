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

#include "mqc/coherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mqc/error.hpp"

namespace mqc {

namespace {

double spectral_power(double p, double s) { return p > 0.0 ? std::pow(p, s) : 0.0; }

// Reference-basis matrix of c_s rho^s.
ComplexMatrix reference_power(const EigenSystem& rho, const Observable& a, double s) {
  std::vector<double> powered(rho.dim());
  double total = 0.0;
  for (std::size_t k = 0; k < rho.dim(); ++k) {
    powered[k] = spectral_power(rho.values[k], s);
    total += powered[k];
  }
  for (double& v : powered) v /= total;
  return to_basis(reconstruct(rho.vectors, powered), a.eigensystem.vectors);
}

void require_same_dim(std::size_t lhs, std::size_t rhs, const char* what) {
  if (lhs != rhs) throw Error(ErrorCode::kDimMismatch, what);
}

}  // namespace

void require_open_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

double power_trace(const EigenSystem& rho, double s) {
  double total = 0.0;
  for (double p : rho.values) total += spectral_power(p, s);
  return total;
}

NormalizedPower normalized_power(const EigenSystem& rho, double alpha) {
  require_open_alpha(alpha);
  const double c = 1.0 / power_trace(rho, alpha);
  ComplexMatrix m = matrix_power(rho, alpha);
  m *= c;
  return NormalizedPower{alpha, c, std::move(m)};
}

NormalizedPower normalized_power(const ComplexMatrix& rho, double alpha) {
  require_open_alpha(alpha);
  return normalized_power(eigh_psd(rho), alpha);
}

ComplexMatrix CoherenceDecomposition::block(int m) const {
  const auto it = orders.find(m);
  if (it != orders.end()) return it->second;
  const std::size_t d = orders.empty() ? 1 : orders.begin()->second.dim();
  return ComplexMatrix(d);
}

ComplexMatrix CoherenceDecomposition::sum() const {
  ComplexMatrix total = block(0);
  for (const auto& [m, b] : orders)
    if (m != 0) total += b;
  return total;
}

ComplexMatrix order_block(const ComplexMatrix& m, const Observable& a, int order) {
  require_same_dim(m.dim(), a.dim(), "order_block");
  ComplexMatrix ref = to_basis(m, a.eigensystem.vectors);
  const std::size_t d = ref.dim();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l)
      if (a.order(j, l) != order) ref(j, l) = 0.0;
  return from_basis(ref, a.eigensystem.vectors);
}

CoherenceDecomposition decompose(const NormalizedPower& np, const Observable& a) {
  require_same_dim(np.matrix.dim(), a.dim(), "decompose");
  const ComplexMatrix ref = to_basis(np.matrix, a.eigensystem.vectors);
  const std::size_t d = ref.dim();
  std::map<int, ComplexMatrix> ref_blocks;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l) {
      const int m = a.order(j, l);
      auto it = ref_blocks.try_emplace(m, d).first;
      it->second(j, l) = ref(j, l);
    }
  CoherenceDecomposition out{np.alpha, {}};
  for (auto& [m, block] : ref_blocks) {
    if (block.max_abs() <= kBlockZeroTol) continue;
    out.orders.emplace(m, from_basis(block, a.eigensystem.vectors));
  }
  return out;
}

int MqiSpectrum::m_max() const { return intensities.empty() ? 0 : intensities.rbegin()->first; }

Complex MqiSpectrum::at(int m) const {
  const auto it = intensities.find(m);
  return it == intensities.end() ? Complex{} : it->second;
}

Complex MqiSpectrum::total() const {
  Complex sum{};
  for (const auto& [m, v] : intensities) sum += v;
  return sum;
}

MqiSpectrum mqi_spectrum(const EigenSystem& rho, const Observable& a, double alpha) {
  require_open_alpha(alpha);
  require_same_dim(rho.dim(), a.dim(), "mqi_spectrum");
  const ComplexMatrix ra = reference_power(rho, a, alpha);
  const ComplexMatrix rb = reference_power(rho, a, 1.0 - alpha);

  MqiSpectrum spec;
  spec.alpha = alpha;
  spec.c_alpha = 1.0 / power_trace(rho, alpha);
  spec.c_one_minus_alpha = 1.0 / power_trace(rho, 1.0 - alpha);
  spec.spacing_unit = a.spacing_unit;
  const int m_max = a.max_order();
  for (int m = -m_max; m <= m_max; ++m) spec.intensities[m] = 0.0;
  const std::size_t d = ra.dim();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l) spec.intensities[a.order(j, l)] += std::conj(ra(j, l)) * rb(j, l);
  return spec;
}

MqiSpectrum mqi_spectrum(const ComplexMatrix& rho, const Observable& a, double alpha) {
  require_open_alpha(alpha);
  return mqi_spectrum(eigh_psd(rho), a, alpha);
}

double second_moment(const MqiSpectrum& spec) {
  Complex f{};
  for (const auto& [m, v] : spec.intensities) f += 2.0 * static_cast<double>(m) * m * v;
  if (std::abs(f.imag()) > kImaginaryTol) {
    throw Error(ErrorCode::kImaginaryResidue,
                "second moment has imaginary part " + std::to_string(f.imag()));
  }
  return f.real();
}

double relative_purity(const EigenSystem& rho, const EigenSystem& sigma, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange, "relative purity needs alpha in [0, 1]");
  }
  require_same_dim(rho.dim(), sigma.dim(), "relative_purity");
  const ComplexMatrix overlap = rho.vectors.adjoint() * sigma.vectors;
  const std::size_t d = rho.dim();
  double f = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double pj = spectral_power(rho.values[j], alpha);
    if (pj == 0.0) continue;
    for (std::size_t k = 0; k < d; ++k) {
      f += pj * spectral_power(sigma.values[k], 1.0 - alpha) * std::norm(overlap(j, k));
    }
  }
  return f;
}

double relative_purity(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha) {
  return relative_purity(eigh_psd(rho), eigh_psd(sigma), alpha);
}

double renyi_relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                              double alpha) {
  require_open_alpha(alpha);
  const double f = relative_purity(rho, sigma, alpha);
  if (f <= kPurityFloor) return std::numeric_limits<double>::infinity();
  return std::max(0.0, std::log(f) / (alpha - 1.0));
}

double renyi_entropy(const EigenSystem& rho, double alpha) {
  require_open_alpha(alpha);
  return std::max(0.0, std::log(power_trace(rho, alpha)) / (1.0 - alpha));
}

double renyi_entropy(const ComplexMatrix& rho, double alpha) {
  return renyi_entropy(eigh_psd(rho), alpha);
}

double d_alpha_from_spectrum(const MqiSpectrum& spec, double s_alpha, double s_one_minus_alpha,
                             double phi) {
  const double alpha = spec.alpha;
  require_open_alpha(alpha);
  Complex sum{};
  for (const auto& [m, v] : spec.intensities) {
    sum += std::polar(1.0, -static_cast<double>(m) * spec.spacing_unit * phi) * v;
  }
  if (std::abs(sum.imag()) > kImaginaryTol) {
    throw Error(ErrorCode::kImaginaryResidue,
                "log argument has imaginary part " + std::to_string(sum.imag()));
  }
  // Scale of the argument is c_alpha c_{1-alpha}, which can be well below 1.
  if (sum.real() <= kPurityFloor * spec.c_alpha * spec.c_one_minus_alpha) {
    return std::numeric_limits<double>::infinity();
  }
  return alpha / (alpha - 1.0) * s_one_minus_alpha - s_alpha +
         std::log(sum.real()) / (alpha - 1.0);
}

MqiSpectrum fourier_extract(const ComplexMatrix& rho, const Observable& a, double alpha,
                            int samples) {
  require_open_alpha(alpha);
  require_same_dim(rho.dim(), a.dim(), "fourier_extract");
  const int m_max = a.max_order();
  if (samples < 2 * m_max + 1) {
    throw Error(ErrorCode::kUndersampled, std::to_string(samples) + " samples for orders up to " +
                                              std::to_string(m_max));
  }
  const EigenSystem rho_es = eigh_psd(rho);

  MqiSpectrum spec;
  spec.alpha = alpha;
  spec.c_alpha = 1.0 / power_trace(rho_es, alpha);
  spec.c_one_minus_alpha = 1.0 / power_trace(rho_es, 1.0 - alpha);
  spec.spacing_unit = a.spacing_unit;
  for (int m = -m_max; m <= m_max; ++m) spec.intensities[m] = 0.0;

  const double cc = spec.c_alpha * spec.c_one_minus_alpha;
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const ComplexMatrix u = unitary_from_generator(a.eigensystem, theta / a.spacing_unit);
    const double f = relative_purity(rho_es, eigh_psd(conjugate(rho, u)), alpha);
    for (auto& [m, v] : spec.intensities) v += std::polar(cc * f / samples, m * theta);
  }
  return spec;
}

MqiSpectrum fourier_extract(const ComplexMatrix& rho, const Observable& a, double alpha) {
  return fourier_extract(rho, a, alpha, 2 * a.max_order() + 1);
}

}  // namespace mqc

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

#include "mqc/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mqc/error.hpp"

namespace mqc {

namespace {

double spectral_power(double p, double s) { return p > 0.0 ? std::pow(p, s) : 0.0; }

// |<psi_j|A|psi_l>|^2 in the eigenbasis of rho.
std::vector<double> squared_elements(const EigenSystem& rho, const ComplexMatrix& a) {
  if (rho.dim() != a.dim()) throw Error(ErrorCode::kDimMismatch, "quantifier");
  if (!a.is_hermitian(kHermitianTol)) {
    throw Error(ErrorCode::kNotHermitian, "generator is not Hermitian");
  }
  const ComplexMatrix b = to_basis(a, rho.vectors);
  std::vector<double> w(b.entries().size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = std::norm(b.entries()[k]);
  return w;
}

template <class Kernel>
double pair_sum(const EigenSystem& rho, const ComplexMatrix& a, Kernel kernel) {
  const std::vector<double> w = squared_elements(rho, a);
  const std::size_t d = rho.dim();
  double total = 0.0;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = j + 1; l < d; ++l) total += kernel(rho.values[j], rho.values[l]) * w[j * d + l];
  return total;
}

bool ordered(std::initializer_list<double> chain, double slack) {
  const double* prev = nullptr;
  for (const double& v : chain) {
    if (prev && *prev > v + slack) return false;
    prev = &v;
  }
  return true;
}

}  // namespace

double wydsi(const EigenSystem& rho, const ComplexMatrix& a, double alpha) {
  require_open_alpha(alpha);
  return pair_sum(rho, a, [alpha](double p, double q) {
    return (spectral_power(p, alpha) - spectral_power(q, alpha)) *
           (spectral_power(p, 1.0 - alpha) - spectral_power(q, 1.0 - alpha));
  });
}

double wydsi(const ComplexMatrix& rho, const ComplexMatrix& a, double alpha) {
  require_open_alpha(alpha);
  return wydsi(eigh_psd(rho), a, alpha);
}

double wydsi_commutator(const ComplexMatrix& rho, const ComplexMatrix& a, double alpha) {
  require_open_alpha(alpha);
  const EigenSystem es = eigh_psd(rho);
  const ComplexMatrix ca = commutator(a, matrix_power(es, alpha));
  const ComplexMatrix cb = commutator(a, matrix_power(es, 1.0 - alpha));
  return -0.5 * (ca * cb).trace().real();
}

double lower_quantifier(const EigenSystem& rho, const ComplexMatrix& a) {
  return 0.5 * pair_sum(rho, a, [](double p, double q) { return (p - q) * (p - q); });
}

double lower_quantifier(const ComplexMatrix& rho, const ComplexMatrix& a) {
  return lower_quantifier(eigh_psd(rho), a);
}

double qfi(const EigenSystem& rho, const ComplexMatrix& a) {
  // The ordered double sum is twice the j < l sum.
  return pair_sum(rho, a, [](double p, double q) {
    return p + q > kQfiDenominatorFloor ? (p - q) * (p - q) / (p + q) : 0.0;
  });
}

double qfi(const ComplexMatrix& rho, const ComplexMatrix& a) { return qfi(eigh_psd(rho), a); }

double variance(const ComplexMatrix& rho, const ComplexMatrix& a) {
  if (rho.dim() != a.dim()) throw Error(ErrorCode::kDimMismatch, "variance");
  const ComplexMatrix ra = rho * a;
  const double mean = ra.trace().real();
  return (ra * a).trace().real() - mean * mean;
}

double alpha_variance_from(double v, double skew) {
  double radicand = v * v - (v - skew) * (v - skew);
  if (radicand < 0.0) {
    const double scale = std::max(1.0, v * v);
    if (radicand < -kRadicandError * scale) {
      throw Error(ErrorCode::kNegativeRadicand,
                  "alpha-variance radicand " + std::to_string(radicand));
    }
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

double alpha_variance(const ComplexMatrix& rho, const ComplexMatrix& a, double alpha) {
  return alpha_variance_from(variance(rho, a), wydsi(rho, a, alpha));
}

double kl_limit_coefficient(const ComplexMatrix& rho, const ComplexMatrix& a) {
  if (rho.dim() != a.dim()) throw Error(ErrorCode::kDimMismatch, "kl_limit_coefficient");
  const EigenSystem es = eigh_psd(rho);
  if (es.values.front() < kFullRankFloor) {
    throw Error(ErrorCode::kSingularState, "logarithm needs a full-rank state");
  }
  std::vector<double> logs(es.dim());
  for (std::size_t k = 0; k < es.dim(); ++k) logs[k] = std::log(es.values[k]);
  const ComplexMatrix log_rho = reconstruct(es.vectors, logs);
  const ComplexMatrix rho_log = rho * log_rho;
  const Complex first = (a * a * rho_log).trace();
  const Complex second = (a * rho * a * log_rho).trace();
  return (first - second).real();
}

double BoundReport::scale() const {
  return std::max({1.0, std::abs(lower_il_term), std::abs(f_over_4cc), std::abs(wysi),
                   std::abs(wydsi), std::abs(v_alpha), std::abs(v_half), std::abs(variance),
                   std::abs(qfi), 2.0 * std::abs(wysi)});
}

std::array<bool, 3> check_chains(const BoundReport& r) {
  const double slack = kBoundSlack * r.scale();
  return {ordered({r.lower_il_term, r.f_over_4cc, r.wysi, r.v_half}, slack),
          ordered({r.lower_il_term, r.f_over_4cc, r.v_alpha, r.v_half}, slack),
          ordered({r.f_over_4cc, r.wysi, r.qfi, 2.0 * r.wysi}, slack)};
}

BoundReport bound_report(const ComplexMatrix& rho, const Observable& a, double alpha) {
  require_open_alpha(alpha);
  const EigenSystem es = eigh_psd(rho);
  const MqiSpectrum spec = mqi_spectrum(es, a, alpha);

  BoundReport r;
  r.alpha = alpha;
  r.c_alpha = spec.c_alpha;
  r.c_one_minus_alpha = spec.c_one_minus_alpha;
  r.second_moment = second_moment(spec);
  r.f_over_4cc = a.spacing_unit * a.spacing_unit * r.second_moment /
                 (4.0 * spec.c_alpha * spec.c_one_minus_alpha);
  r.lower_il_term = 2.0 * alpha * (1.0 - alpha) * lower_quantifier(es, a.matrix);
  r.wydsi = wydsi(es, a.matrix, alpha);
  r.wysi = wydsi(es, a.matrix, 0.5);
  r.variance = variance(rho, a.matrix);
  r.v_alpha = alpha_variance_from(r.variance, r.wydsi);
  r.v_half = alpha_variance_from(r.variance, r.wysi);
  r.qfi = qfi(es, a.matrix);
  r.chain_ok = check_chains(r);
  return r;
}

}  // namespace mqc

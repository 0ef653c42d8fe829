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

#include "mqc/echo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mqc/error.hpp"
#include "mqc/states.hpp"

namespace mqc {

void EchoProtocolConfig::validate() const {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "echo needs n >= 2");
  if (n > kMaxEchoQubits) {
    throw Error(ErrorCode::kTooLarge, "echo supports at most 10 qubits");
  }
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::kInvalidP, "p must lie in (0, 1)");
  if (!std::isfinite(coupling) || !std::isfinite(phi)) {
    throw Error(ErrorCode::kInvalidArgument, "coupling and phi must be finite");
  }
  if (t_grid.empty() || alpha_grid.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "time and alpha grids must be nonempty");
  }
  for (double t : t_grid)
    if (!std::isfinite(t)) throw Error(ErrorCode::kInvalidArgument, "time grid must be finite");
  for (double a : alpha_grid) require_open_alpha(a);
}

std::vector<double> default_echo_times(int n, int points) {
  if (points < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one time point");
  std::vector<double> grid(points, 0.0);
  const double stop = std::numbers::pi * n / 2.0;
  for (int k = 1; k < points; ++k) grid[k] = stop * k / (points - 1);
  return grid;
}

EchoSimulator::EchoSimulator(EchoProtocolConfig config) : config_(std::move(config)) {
  config_.validate();
  std::sort(config_.t_grid.begin(), config_.t_grid.end());
  rho0_ = family_state({config_.n, config_.p, Family::kEqualSuperposition});
  rho0_es_ = eigh_psd(rho0_);
  h_diag_ = ising_diagonal(config_.n, config_.coupling);
  spin_x_ = collective_spin(config_.n, {1.0, 0.0, 0.0});
  rotation_ = unitary_from_generator(spin_x_.eigensystem, config_.phi);
}

ComplexMatrix EchoSimulator::evolve(const ComplexMatrix& m, double t) const {
  // H is diagonal: (U M U^dagger)_{ab} = exp(-i t (h_a - h_b)) M_{ab}
  ComplexMatrix out = m;
  const std::size_t d = m.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) out(a, b) *= std::polar(1.0, -t * (h_diag_[a] - h_diag_[b]));
  return out;
}

ComplexMatrix EchoSimulator::evolved_state(double t) const { return evolve(rho0_, t); }

ComplexMatrix EchoSimulator::rotated_state(double t) const {
  return conjugate(evolved_state(t), rotation_);
}

ComplexMatrix EchoSimulator::final_state(double t) const { return evolve(rotated_state(t), -t); }

EchoPurity EchoSimulator::purity(double t, double alpha) const {
  require_open_alpha(alpha);
  const ComplexMatrix rho_t = evolved_state(t);
  const ComplexMatrix rho_t_phi = conjugate(rho_t, rotation_);
  const ComplexMatrix rho_f = evolve(rho_t_phi, -t);
  EchoPurity out;
  out.initial_vs_final = relative_purity(rho0_es_, eigh_psd(rho_f), alpha);
  out.evolved_vs_rotated = relative_purity(eigh_psd(rho_t), eigh_psd(rho_t_phi), alpha);
  if (std::abs(out.initial_vs_final - out.evolved_vs_rotated) > kPathTol) {
    throw Error(ErrorCode::kMismatchedPaths,
                "echo purity paths differ at t = " + std::to_string(t));
  }
  out.value = out.initial_vs_final;
  return out;
}

MqiSpectrum EchoSimulator::mqi(double t, double alpha) const {
  require_open_alpha(alpha);
  MqiSpectrum spec = mqi_spectrum(evolved_state(t), spin_x_, alpha);
  const double c0 = 1.0 / power_trace(rho0_es_, alpha);
  if (std::abs(spec.c_alpha - c0) > 1e-10 * std::max(1.0, c0)) {
    throw Error(ErrorCode::kMismatchedPaths,
                "normaliser drifted under unitary evolution at t = " + std::to_string(t));
  }
  return spec;
}

EchoTrace EchoSimulator::sweep() const {
  std::vector<double> alphas = config_.alpha_grid;
  std::sort(alphas.begin(), alphas.end());
  EchoTrace trace;
  trace.n = config_.n;
  for (double alpha : alphas)
    for (double t : config_.t_grid) {
      EchoRow row;
      row.t = t;
      row.alpha = alpha;
      row.purity = purity(t, alpha).value;
      row.spectrum = mqi(t, alpha);
      row.second_moment = second_moment(row.spectrum);
      trace.rows.push_back(std::move(row));
    }

  const std::size_t count = trace.rows.size();
  std::vector<double> f(count), big_f(count);
  for (std::size_t k = 0; k < count; ++k) {
    f[k] = trace.rows[k].purity;
    big_f[k] = trace.rows[k].second_moment;
  }
  f = min_max_normalize(f);
  big_f = min_max_normalize(big_f);
  for (std::size_t k = 0; k < count; ++k) {
    trace.rows[k].purity_normalized = f[k];
    trace.rows[k].second_moment_normalized = big_f[k];
  }
  for (int m = -config_.n; m <= config_.n; ++m) {
    std::vector<double> column(count);
    for (std::size_t k = 0; k < count; ++k) column[k] = trace.rows[k].spectrum.at(m).real();
    column = min_max_normalize(column);
    for (std::size_t k = 0; k < count; ++k) trace.rows[k].intensity_normalized[m] = column[k];
  }
  return trace;
}

ComplexMatrix protocol_final_state(const EchoProtocolConfig& config, double t) {
  return EchoSimulator(config).final_state(t);
}

double echo_purity(const EchoProtocolConfig& config, double t, double alpha) {
  return EchoSimulator(config).purity(t, alpha).value;
}

MqiSpectrum mqi_of_evolved(const EchoProtocolConfig& config, double t, double alpha) {
  return EchoSimulator(config).mqi(t, alpha);
}

EchoTrace run_sweep(const EchoProtocolConfig& config) { return EchoSimulator(config).sweep(); }

std::vector<double> min_max_normalize(const std::vector<double>& values) {
  std::vector<double> out(values.size(), 0.0);
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double span = *hi - *lo;
  if (span == 0.0) return out;
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = (values[k] - *lo) / span;
  return out;
}

}  // namespace mqc

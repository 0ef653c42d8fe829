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
#include <numbers>
#include <vector>

#include "mqc/coherence.hpp"
#include "mqc/observables.hpp"

namespace mqc {

inline constexpr int kMaxEchoQubits = 10;
inline constexpr double kPathTol = 1e-8;

// Forward Ising evolution, rotation about x, backward evolution, starting
// from the mixed equal-superposition state. Times are in units of 1/J.
struct EchoProtocolConfig {
  int n = 4;
  double coupling = 1.0;
  double p = 0.5;
  double phi = std::numbers::pi / 2.0;
  std::vector<double> t_grid;
  std::vector<double> alpha_grid;

  // Throws InvalidArgument, TooLarge, InvalidP or AlphaOutOfRange.
  void validate() const;
};

// Default grid: `points` times evenly spaced over [0, pi N / 2].
std::vector<double> default_echo_times(int n, int points = 40);

struct EchoPurity {
  double value = 1.0;
  double initial_vs_final = 1.0;   // f(rho_0, rho_f)
  double evolved_vs_rotated = 1.0;  // f(rho_t, rho_{t,phi})
};

struct EchoRow {
  double t = 0.0;
  double alpha = 0.5;
  double purity = 1.0;
  double second_moment = 0.0;
  MqiSpectrum spectrum;
  double purity_normalized = 0.0;
  double second_moment_normalized = 0.0;
  std::map<int, double> intensity_normalized;  // of Re I_m
};

struct EchoTrace {
  int n = 0;
  std::vector<EchoRow> rows;  // sorted by alpha, then t
};

// Immutable once built; all member functions are const and reentrant.
class EchoSimulator {
 public:
  explicit EchoSimulator(EchoProtocolConfig config);

  const EchoProtocolConfig& config() const { return config_; }
  const ComplexMatrix& initial_state() const { return rho0_; }
  const Observable& spin_x() const { return spin_x_; }
  const std::vector<double>& hamiltonian_diagonal() const { return h_diag_; }

  // U_t rho_0 U_t^dagger
  ComplexMatrix evolved_state(double t) const;
  // R_phi rho_t R_phi^dagger
  ComplexMatrix rotated_state(double t) const;
  // U_t^dagger rho_{t,phi} U_t
  ComplexMatrix final_state(double t) const;

  // Both sides of the echo identity. Throws MismatchedPaths beyond 1e-8.
  EchoPurity purity(double t, double alpha) const;
  // Spectrum of rho_t in the S_x reference basis.
  MqiSpectrum mqi(double t, double alpha) const;

  EchoTrace sweep() const;

 private:
  ComplexMatrix evolve(const ComplexMatrix& m, double t) const;

  EchoProtocolConfig config_;
  ComplexMatrix rho0_;
  EigenSystem rho0_es_;
  std::vector<double> h_diag_;
  Observable spin_x_;
  ComplexMatrix rotation_;
};

ComplexMatrix protocol_final_state(const EchoProtocolConfig& config, double t);
double echo_purity(const EchoProtocolConfig& config, double t, double alpha);
MqiSpectrum mqi_of_evolved(const EchoProtocolConfig& config, double t, double alpha);
EchoTrace run_sweep(const EchoProtocolConfig& config);

// (x - min) / (max - min) over the sample, 0 everywhere when max == min.
std::vector<double> min_max_normalize(const std::vector<double>& values);

}  // namespace mqc

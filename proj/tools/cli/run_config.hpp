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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/table.hpp"
#include "mqc/matrix.hpp"
#include "mqc/observables.hpp"
#include "mqc/states.hpp"

namespace mqc::cli {

// Bad flags, values or input files. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A row failed its invariants before serialization. Maps to exit status 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kMqi, kBounds, kClosedForms, kEcho, kLimits };

struct StateSpec {
  enum class Kind { kNone, kFamily, kBloch, kBell, kFile, kRandom };
  Kind kind = Kind::kNone;
  Family family = Family::kEqualSuperposition;
  int n = 0;
  double p = 0.5;
  BlochVector bloch;
  BellDiagonalParams bell;
  std::string path;
  std::size_t random_dim = 0;
};

struct GeneratorSpec {
  enum class Kind { kDefault, kDirection, kIsing };
  Kind kind = Kind::kDefault;
  Vec3 direction{0.0, 0.0, 1.0};
  double coupling = 1.0;
};

struct RunConfig {
  Command command = Command::kMqi;
  StateSpec state;
  GeneratorSpec generator;
  std::vector<double> alphas;  // ascending
  std::vector<double> t_grid;  // echo only; empty means the default grid
  double phi = 0.0;
  std::optional<std::string> out;
  Format format = Format::kCsv;
  std::uint64_t seed = 0;
};

// START:STOP:STEP, inclusive of STOP up to roundoff. Values are START + k STEP.
std::vector<double> parse_grid(const std::string& spec);
// Comma-separated triple.
Vec3 parse_triple(const std::string& spec);
GeneratorSpec parse_generator(const std::string& spec);

struct PreparedState {
  ComplexMatrix rho;
  int qubits = -1;  // -1 when the dimension is not a power of two
};

// {"real": [[...]], "imag": [[...]]}; imag is optional.
ComplexMatrix read_state_file(const std::string& path);
PreparedState build_state(const StateSpec& spec, std::uint64_t seed);
Observable build_generator(const GeneratorSpec& spec, const StateSpec& state, int qubits);
// Direction used by collective generators when --generator is omitted.
Vec3 default_direction(const StateSpec& state);

}  // namespace mqc::cli

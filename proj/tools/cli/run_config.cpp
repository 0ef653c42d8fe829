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

#include "cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mqc/error.hpp"
#include "mqc/hermitian.hpp"

namespace mqc::cli {
namespace {

constexpr std::size_t kMaxGridPoints = 1000000;
constexpr double kStateTol = 1e-10;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ConfigError("cannot parse " + what + " '" + text + "'");
  }
  return value;
}

int qubits_for_dim(std::size_t d) {
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return (std::size_t{1} << n) == d ? n : -1;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw ConfigError("grid must be START:STOP:STEP, got '" + spec + "'");
  const double start = parse_number(parts[0], "grid start");
  const double stop = parse_number(parts[1], "grid stop");
  const double step = parse_number(parts[2], "grid step");
  if (!(step > 0.0)) throw ConfigError("grid step must be positive");
  if (stop < start) throw ConfigError("grid stop is below start");
  const double span = (stop - start) / step;
  if (span + 1.0 > static_cast<double>(kMaxGridPoints)) throw ConfigError("grid has too many points");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = start + static_cast<double>(k) * step;
  return grid;
}

Vec3 parse_triple(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 3) throw ConfigError("expected three comma-separated numbers, got '" + spec + "'");
  return {parse_number(parts[0], "component"), parse_number(parts[1], "component"),
          parse_number(parts[2], "component")};
}

GeneratorSpec parse_generator(const std::string& spec) {
  GeneratorSpec g;
  if (spec == "sx") {
    g.kind = GeneratorSpec::Kind::kDirection;
    g.direction = {1.0, 0.0, 0.0};
  } else if (spec == "sy") {
    g.kind = GeneratorSpec::Kind::kDirection;
    g.direction = {0.0, 1.0, 0.0};
  } else if (spec == "sz") {
    g.kind = GeneratorSpec::Kind::kDirection;
    g.direction = {0.0, 0.0, 1.0};
  } else if (spec == "ising") {
    g.kind = GeneratorSpec::Kind::kIsing;
  } else {
    g.kind = GeneratorSpec::Kind::kDirection;
    g.direction = parse_triple(spec);
  }
  return g;
}

ComplexMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open state file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("state file " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("real")) {
    throw ConfigError("state file needs a \"real\" matrix");
  }
  try {
    const auto re = doc.at("real").get<std::vector<std::vector<double>>>();
    const std::size_t d = re.size();
    std::vector<std::vector<double>> im(d, std::vector<double>(d, 0.0));
    if (doc.contains("imag")) im = doc.at("imag").get<std::vector<std::vector<double>>>();
    if (d < 2 || im.size() != d) throw ConfigError("state matrix must be square with dim >= 2");
    ComplexMatrix rho(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (re[i].size() != d || im[i].size() != d) throw ConfigError("state matrix must be square");
      for (std::size_t j = 0; j < d; ++j) rho(i, j) = Complex(re[i][j], im[i][j]);
    }
    return rho;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("state file " + path + ": " + e.what());
  }
}

PreparedState build_state(const StateSpec& spec, std::uint64_t seed) {
  PreparedState s;
  switch (spec.kind) {
    case StateSpec::Kind::kNone:
      throw ConfigError(
          "no state given; use one of --family, --bloch, --bell, --state-file, --random-dim");
    case StateSpec::Kind::kFamily:
      if (spec.n < 1) throw ConfigError("--family needs --n");
      s.rho = family_state({spec.n, spec.p, spec.family});
      s.qubits = spec.n;
      return s;
    case StateSpec::Kind::kBloch:
      s.rho = qubit_state(spec.bloch);
      s.qubits = 1;
      return s;
    case StateSpec::Kind::kBell:
      s.rho = bell_diagonal(spec.bell);
      s.qubits = 2;
      return s;
    case StateSpec::Kind::kRandom:
      s.rho = random_density(spec.random_dim, seed);
      s.qubits = qubits_for_dim(spec.random_dim);
      return s;
    case StateSpec::Kind::kFile:
      break;
  }
  s.rho = read_state_file(spec.path);
  if (!s.rho.is_hermitian(kStateTol)) throw ConfigError("state file matrix is not Hermitian");
  if (std::abs(s.rho.trace().real() - 1.0) > kStateTol) {
    throw ConfigError("state file matrix does not have unit trace");
  }
  const EigenSystem es = eigh(s.rho);
  if (es.values.front() < -kNegativeClamp) {
    throw ConfigError("state file matrix is not positive semidefinite");
  }
  s.qubits = qubits_for_dim(s.rho.dim());
  return s;
}

Vec3 default_direction(const StateSpec& state) {
  if (state.kind == StateSpec::Kind::kFamily && state.family == Family::kW) return {1.0, 0.0, 0.0};
  return {0.0, 0.0, 1.0};
}

Observable build_generator(const GeneratorSpec& spec, const StateSpec& state, int qubits) {
  if (qubits < 1) throw ConfigError("collective generators need a 2^n-dimensional state");
  if (qubits > kMaxFamilyQubits) throw ConfigError("generators support at most 12 qubits");
  switch (spec.kind) {
    case GeneratorSpec::Kind::kIsing:
      if (qubits < 2) throw ConfigError("the Ising generator needs at least 2 qubits");
      return ising_hamiltonian(qubits, spec.coupling);
    case GeneratorSpec::Kind::kDirection:
      return collective_spin(qubits, spec.direction);
    case GeneratorSpec::Kind::kDefault:
      break;
  }
  return collective_spin(qubits, default_direction(state));
}

}  // namespace mqc::cli

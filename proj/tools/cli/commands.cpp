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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "mqc/closed_forms.hpp"
#include "mqc/coherence.hpp"
#include "mqc/echo.hpp"
#include "mqc/hermitian.hpp"
#include "mqc/quantifiers.hpp"

namespace mqc::cli {
namespace {

void check_spectrum(const MqiSpectrum& spec, const std::string& where) {
  const double cc = spec.c_alpha * spec.c_one_minus_alpha;
  if (std::abs(spec.total() - Complex(cc, 0.0)) > kRowCheckTol * std::max(1.0, cc)) {
    throw NumericalError(where + ": MQI sum rule violated");
  }
  for (const auto& [m, v] : spec.intensities) {
    if (std::abs(v - std::conj(spec.at(-m))) > kRowCheckTol) {
      throw NumericalError(where + ": MQI conjugate symmetry violated at m=" + std::to_string(m));
    }
  }
}

std::string at_alpha(double alpha) { return "alpha=" + format_number(alpha); }

std::string suffix_removed(const std::string& key, const std::string& suffix) {
  if (key.size() > suffix.size() && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return key.substr(0, key.size() - suffix.size());
  }
  return key;
}

}  // namespace

double mixed_error(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

Table cmd_mqi(const RunConfig& config) {
  const PreparedState state = build_state(config.state, config.seed);
  const Observable a = build_generator(config.generator, config.state, state.qubits);
  const EigenSystem es = eigh_psd(state.rho);

  Table table;
  table.columns = {"alpha", "m", "re", "im", "c_alpha", "c_one_minus_alpha", "F", "spacing_unit"};
  for (double alpha : config.alphas) {
    const MqiSpectrum spec = mqi_spectrum(es, a, alpha);
    check_spectrum(spec, at_alpha(alpha));
    const double f = second_moment(spec);
    for (const auto& [m, v] : spec.intensities) {
      table.add_row({alpha, static_cast<long long>(m), v.real(), v.imag(), spec.c_alpha,
                     spec.c_one_minus_alpha, f, spec.spacing_unit});
    }
  }
  return table;
}

Table cmd_bounds(const RunConfig& config) {
  const PreparedState state = build_state(config.state, config.seed);
  const Observable a = build_generator(config.generator, config.state, state.qubits);

  Table table;
  table.columns = {"alpha",         "lower_il_term", "f_over_4cc",   "wysi",
                   "wydsi",         "v_alpha",       "v_half",       "variance",
                   "qfi",           "F",             "c_alpha",      "c_one_minus_alpha",
                   "chain_skew",    "chain_variance", "chain_fisher"};
  for (double alpha : config.alphas) {
    const BoundReport r = bound_report(state.rho, a, alpha);
    for (std::size_t k = 0; k < r.chain_ok.size(); ++k) {
      if (!r.chain_ok[k]) {
        throw NumericalError(at_alpha(alpha) + ": bound chain " + std::to_string(k + 1) + " violated");
      }
    }
    table.add_row({r.alpha, r.lower_il_term, r.f_over_4cc, r.wysi, r.wydsi, r.v_alpha, r.v_half,
                   r.variance, r.qfi, r.second_moment, r.c_alpha, r.c_one_minus_alpha,
                   r.chain_ok[0], r.chain_ok[1], r.chain_ok[2]});
  }
  return table;
}

Table cmd_closed_forms(const RunConfig& config) {
  const StateSpec& s = config.state;
  if (s.kind != StateSpec::Kind::kFamily && s.kind != StateSpec::Kind::kBloch &&
      s.kind != StateSpec::Kind::kBell) {
    throw ConfigError("closed forms need --family, --bloch or --bell");
  }
  const PreparedState state = build_state(s, config.seed);
  if (config.generator.kind == GeneratorSpec::Kind::kIsing) {
    throw ConfigError("closed forms are tabulated for collective spin generators only");
  }
  Vec3 n = config.generator.kind == GeneratorSpec::Kind::kDirection ? config.generator.direction
                                                                    : default_direction(s);
  if (s.kind == StateSpec::Kind::kFamily && config.generator.kind != GeneratorSpec::Kind::kDefault &&
      n != default_direction(s)) {
    throw ConfigError(std::string("closed forms for the ") + std::string(to_string(s.family)) +
                      " family use " + (s.family == Family::kW ? "sx" : "sz"));
  }
  const Observable a = collective_spin(state.qubits, n);
  const EigenSystem es = eigh_psd(state.rho);

  Table table;
  table.columns = {"alpha", "quantifier", "closed_form", "engine", "error", "printed_form"};
  for (double alpha : config.alphas) {
    ClosedFormReport rep;
    if (s.kind == StateSpec::Kind::kBloch) {
      rep = single_qubit_forms(s.bloch, n, alpha);
    } else if (s.kind == StateSpec::Kind::kBell) {
      rep = bell_diagonal_forms(s.bell, n, alpha);
    } else {
      rep = family_forms({s.n, s.p, s.family}, alpha);
    }
    const MqiSpectrum spec = mqi_spectrum(es, a, alpha);
    check_spectrum(spec, at_alpha(alpha));

    auto engine = [&](const std::string& key) -> std::optional<double> {
      if (key == "c_alpha") return spec.c_alpha;
      if (key == "c_one_minus_alpha") return spec.c_one_minus_alpha;
      if (key == "F") return second_moment(spec);
      if (key == "IL") return lower_quantifier(es, a.matrix);
      if (key == "FQ") return qfi(es, a.matrix);
      if (key == "V") return variance(state.rho, a.matrix);
      if (key == "I_half") return wydsi(es, a.matrix, 0.5);
      if (key.size() == 4 && key.rfind("F_S", 0) == 0) {
        const int axis = key[3] - 'x';
        Vec3 dir{0.0, 0.0, 0.0};
        dir[axis] = 1.0;
        return second_moment(mqi_spectrum(es, collective_spin(state.qubits, dir), alpha));
      }
      for (const auto& [m, v] : spec.intensities)
        if (key == mqi_key(m)) return v.real();
      return std::nullopt;
    };

    for (const auto& v : rep.values) {
      const std::string base = suffix_removed(v.quantifier, "_uncorrected");
      const bool printed = base != v.quantifier;
      const std::optional<double> eng = engine(base);
      if (!eng) {
        table.add_row({alpha, v.quantifier, v.value, std::monostate{}, std::monostate{}, printed});
        continue;
      }
      const double err = mixed_error(v.value, *eng);
      if (!printed && err > kRowCheckTol) {
        throw NumericalError(at_alpha(alpha) + ": closed form " + v.quantifier +
                             " disagrees with the engine (error " + format_number(err) + ")");
      }
      table.add_row({alpha, v.quantifier, v.value, *eng, err, printed});
    }
  }
  return table;
}

Table cmd_echo(const RunConfig& config) {
  const StateSpec& s = config.state;
  EchoProtocolConfig ec;
  ec.n = s.n > 0 ? s.n : 4;
  ec.p = s.p;
  ec.coupling = config.generator.coupling;
  ec.phi = config.phi;
  ec.t_grid = config.t_grid.empty() ? default_echo_times(ec.n) : config.t_grid;
  ec.alpha_grid = config.alphas;
  const EchoTrace trace = run_sweep(ec);

  Table table;
  table.columns = {"t", "alpha", "f", "F"};
  for (int m = -trace.n; m <= trace.n; ++m) table.columns.push_back(mqi_key(m));
  table.columns.push_back("f_norm");
  table.columns.push_back("F_norm");
  for (int m = -trace.n; m <= trace.n; ++m) table.columns.push_back(mqi_key(m) + "_norm");

  std::vector<const EchoRow*> rows;
  for (const auto& row : trace.rows) rows.push_back(&row);
  std::stable_sort(rows.begin(), rows.end(), [](const EchoRow* x, const EchoRow* y) {
    return x->alpha != y->alpha ? x->alpha < y->alpha : x->t < y->t;
  });
  for (const EchoRow* row : rows) {
    check_spectrum(row->spectrum, at_alpha(row->alpha) + " t=" + format_number(row->t));
    if (row->purity < -kRowCheckTol || row->purity > 1.0 + kRowCheckTol) {
      throw NumericalError("relative purity left [0, 1] at t=" + format_number(row->t));
    }
    std::vector<Cell> cells{row->t, row->alpha, row->purity, row->second_moment};
    for (int m = -trace.n; m <= trace.n; ++m) cells.emplace_back(row->spectrum.at(m).real());
    cells.emplace_back(row->purity_normalized);
    cells.emplace_back(row->second_moment_normalized);
    for (int m = -trace.n; m <= trace.n; ++m) {
      const auto it = row->intensity_normalized.find(m);
      cells.emplace_back(it == row->intensity_normalized.end() ? 0.0 : it->second);
    }
    table.add_row(std::move(cells));
  }
  return table;
}

Table cmd_limits(const RunConfig& config) {
  const PreparedState state = build_state(config.state, config.seed);
  const Observable a = build_generator(config.generator, config.state, state.qubits);
  const double limit = kl_limit_coefficient(state.rho, a.matrix);
  const EigenSystem es = eigh_psd(state.rho);

  Table table;
  table.columns = {"alpha", "wydsi", "wydsi_over_one_minus_alpha", "kl_limit", "rel_diff"};
  for (double alpha : config.alphas) {
    const double skew = wydsi(es, a.matrix, alpha);
    const double ratio = skew / (1.0 - alpha);
    const double diff = limit != 0.0 ? std::abs(ratio - limit) / std::abs(limit) : std::abs(ratio);
    table.add_row({alpha, skew, ratio, limit, diff});
  }
  return table;
}

Table run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::kMqi:
      return cmd_mqi(config);
    case Command::kBounds:
      return cmd_bounds(config);
    case Command::kClosedForms:
      return cmd_closed_forms(config);
    case Command::kEcho:
      return cmd_echo(config);
    case Command::kLimits:
      return cmd_limits(config);
  }
  throw ConfigError("unknown command");
}

}  // namespace mqc::cli

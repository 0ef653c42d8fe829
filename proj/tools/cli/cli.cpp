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

#include "cli/cli.hpp"

#include <fstream>
#include <numbers>
#include <ostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/run_config.hpp"

namespace mqc::cli {
namespace {

struct RawOptions {
  std::string family;
  int n = 0;
  double p = 0.5;
  std::string bloch;
  std::string bell;
  std::string state_file;
  std::size_t random_dim = 0;
  std::uint64_t seed = 0;
  std::string generator;
  double coupling = 1.0;
  double alpha = 0.5;
  std::string alpha_grid;
  std::string t_grid;
  double phi = std::numbers::pi / 2.0;
  std::string format = "csv";
  std::string out;
};

struct Subcommand {
  Command command;
  CLI::App* app;
};

void add_options(CLI::App* sub, RawOptions& o, Command command) {
  sub->add_option("--family", o.family, "Mixed family: eqn, ghz or w");
  sub->add_option("--n", o.n, "Number of qubits");
  sub->add_option("--p", o.p, "Family mixing parameter in (0, 1)");
  if (command != Command::kEcho) {
    sub->add_option("--bloch", o.bloch, "Qubit state r,theta,phi (radians)");
    sub->add_option("--bell", o.bell, "Bell-diagonal state ax,ay,az");
    sub->add_option("--state-file", o.state_file, "JSON density matrix {real, imag}");
    sub->add_option("--random-dim", o.random_dim, "Seeded random full-rank state of this dimension");
    sub->add_option("--generator", o.generator, "sx, sy, sz, nx,ny,nz or ising");
  }
  sub->add_option("--seed", o.seed, "Seed for --random-dim");
  sub->add_option("--J", o.coupling, "Ising coupling");
  auto* single = sub->add_option("--alpha", o.alpha, "Single alpha in (0, 1)");
  auto* grid = sub->add_option("--alpha-grid", o.alpha_grid, "START:STOP:STEP");
  single->excludes(grid);
  if (command == Command::kEcho) {
    sub->add_option("--t-grid", o.t_grid, "START:STOP:STEP in units of 1/J");
    sub->add_option("--phi", o.phi, "Rotation angle about x (radians)");
  }
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.out, "Output path; stdout when omitted");
}

std::vector<double> default_alphas(Command command) {
  switch (command) {
    case Command::kEcho:
      return {0.25, 0.5, 0.75};
    case Command::kLimits:
      return {0.9, 0.99, 0.999, 0.9999};
    default:
      return {0.5};
  }
}

RunConfig make_config(Command command, const CLI::App& sub, const RawOptions& o) {
  RunConfig c;
  c.command = command;
  c.seed = o.seed;
  c.format = parse_format(o.format);
  if (!o.out.empty()) c.out = o.out;
  c.phi = o.phi;

  if (sub.count("--alpha")) {
    c.alphas = {o.alpha};
  } else if (sub.count("--alpha-grid")) {
    c.alphas = parse_grid(o.alpha_grid);
  } else {
    c.alphas = default_alphas(command);
  }
  for (double a : c.alphas) {
    if (!(a > 0.0 && a < 1.0)) throw ConfigError("alpha must lie in (0, 1), got " + format_number(a));
  }
  if (command == Command::kEcho && sub.count("--t-grid")) c.t_grid = parse_grid(o.t_grid);

  int given = 0;
  StateSpec& s = c.state;
  if (!o.family.empty()) {
    ++given;
    s.kind = StateSpec::Kind::kFamily;
    s.family = parse_family(o.family);
  }
  if (!o.bloch.empty()) {
    ++given;
    s.kind = StateSpec::Kind::kBloch;
    const Vec3 v = parse_triple(o.bloch);
    s.bloch = {v[0], v[1], v[2]};
  }
  if (!o.bell.empty()) {
    ++given;
    s.kind = StateSpec::Kind::kBell;
    s.bell.a = parse_triple(o.bell);
  }
  if (!o.state_file.empty()) {
    ++given;
    s.kind = StateSpec::Kind::kFile;
    s.path = o.state_file;
  }
  if (command != Command::kEcho && sub.count("--random-dim")) {
    ++given;
    s.kind = StateSpec::Kind::kRandom;
    s.random_dim = o.random_dim;
  }
  if (given > 1) throw ConfigError("give exactly one state");
  s.n = o.n;
  s.p = o.p;
  if (sub.count("--n") && s.kind != StateSpec::Kind::kFamily && command != Command::kEcho) {
    throw ConfigError("--n applies to --family states");
  }

  if (command == Command::kEcho) {
    if (s.kind == StateSpec::Kind::kFamily && s.family != Family::kEqualSuperposition) {
      throw ConfigError("the echo protocol starts from the eqn family");
    }
    c.generator.kind = GeneratorSpec::Kind::kIsing;
  } else if (!o.generator.empty()) {
    c.generator = parse_generator(o.generator);
  }
  c.generator.coupling = o.coupling;
  return c;
}

void emit(const Table& table, const RunConfig& config, std::ostream& out) {
  if (!config.out) {
    write_table(table, config.format, out);
    return;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) throw ConfigError("cannot open " + *config.out + " for writing");
  write_table(table, config.format, file);
  if (!file.flush()) throw ConfigError("failed writing " + *config.out);
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian:
    case ErrorCode::kDimMismatch:
    case ErrorCode::kInvalidBloch:
    case ErrorCode::kUnphysical:
    case ErrorCode::kTooLarge:
    case ErrorCode::kInvalidP:
    case ErrorCode::kNotUnit:
    case ErrorCode::kNotIntegerSpaced:
    case ErrorCode::kAlphaOutOfRange:
    case ErrorCode::kInvalidArgument:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence-order spectra, skew information and echo sweeps", "mqc"};
  app.require_subcommand(1);
  RawOptions options;
  const std::vector<Subcommand> subs{
      {Command::kMqi, app.add_subcommand("mqi", "MQI spectrum per alpha and order")},
      {Command::kBounds, app.add_subcommand("bounds", "Bound hierarchy per alpha")},
      {Command::kClosedForms,
       app.add_subcommand("closed-forms", "Tabulated closed forms against the engine")},
      {Command::kEcho, app.add_subcommand("echo", "Time-reversal echo sweep, Ising model")},
      {Command::kLimits, app.add_subcommand("limits", "alpha -> 1 limit of the skew information")},
  };
  for (const auto& s : subs) add_options(s.app, options, s.command);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (const auto& s : subs) {
      if (!s.app->parsed()) continue;
      const RunConfig config = make_config(s.command, *s.app, options);
      emit(run_command(config), config, out);
      return kExitOk;
    }
    err << "no command given\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mqc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mqc::cli

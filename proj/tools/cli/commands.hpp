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

#include "cli/run_config.hpp"
#include "cli/table.hpp"

namespace mqc::cli {

inline constexpr double kRowCheckTol = 1e-9;

// Each command validates its rows (sum rule, conjugate symmetry, bound chains,
// closed-form agreement) and throws NumericalError before returning a table
// that would violate them.
Table cmd_mqi(const RunConfig& config);
Table cmd_bounds(const RunConfig& config);
Table cmd_closed_forms(const RunConfig& config);
Table cmd_echo(const RunConfig& config);
Table cmd_limits(const RunConfig& config);

Table run_command(const RunConfig& config);

// |got - want| / max(1, |want|)
double mixed_error(double got, double want);

}  // namespace mqc::cli

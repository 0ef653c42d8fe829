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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mqc/states.hpp"

namespace mqc {

struct ClosedFormValue {
  std::string quantifier;
  double value = 0.0;
};

// Analytic values for one (state, generator, alpha) point, with the inputs
// echoed back.
struct ClosedFormReport {
  std::string state;
  std::string generator;
  double alpha = 0.5;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<ClosedFormValue> values;

  bool contains(std::string_view quantifier) const;
  // Throws InvalidArgument for unknown names.
  double get(std::string_view quantifier) const;
  void add(std::string quantifier, double value);
};

// Key of I_m in a report, e.g. "I[-2]".
std::string mqi_key(int m);

// (2N)! / ((N - m)! (N + m)!)
double block_degeneracy(int n, int m);

// Qubit state with generator (1/2) n.sigma.
ClosedFormReport single_qubit_forms(const BlochVector& b, const Vec3& n, double alpha);

// Bell-diagonal state with generator n.S. Throws Unphysical.
ClosedFormReport bell_diagonal_forms(const BellDiagonalParams& params, const Vec3& n,
                                     double alpha);

// Mixed eqn / GHZ states with S_z and the mixed W state with S_x.
ClosedFormReport family_forms(const MixedFamilyParams& params, double alpha);

}  // namespace mqc

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

#include "mqc/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mqc/coherence.hpp"
#include "mqc/error.hpp"
#include "mqc/hermitian.hpp"

namespace mqc {

namespace {

void require_unit(const Vec3& n) {
  if (std::abs(std::sqrt(dot(n, n)) - 1.0) > 1e-10) {
    throw Error(ErrorCode::kNotUnit, "direction must be a unit vector");
  }
}

double safe_pow(double p, double s) { return p > 0.0 ? std::pow(p, s) : 0.0; }

constexpr std::array<const char*, 3> kAxes{"x", "y", "z"};
// (j, k, l) cyclic over {x, y, z}.
constexpr std::array<std::array<int, 3>, 3> kCyclic{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};

std::array<double, 3> bell_eta(const std::array<double, 4>& v, double alpha) {
  double inv_c = 0.0;
  for (double x : v) inv_c += safe_pow(x, alpha);
  const double c = 1.0 / inv_c;
  std::array<double, 3> eta{};
  for (int j = 0; j < 3; ++j) {
    const double sz = j == 2 ? -1.0 : 1.0;
    const double sy = j == 1 ? -1.0 : 1.0;
    const double sx = j == 0 ? -1.0 : 1.0;
    eta[j] = c * (-safe_pow(v[0], alpha) + sz * safe_pow(v[1], alpha) +
                  sy * safe_pow(v[2], alpha) + sx * safe_pow(v[3], alpha));
  }
  return eta;
}

double family_c(double d, double p, double alpha) {
  return 1.0 / ((d - 1.0) * std::pow((1.0 - p) / d, alpha) +
                std::pow((1.0 + (d - 1.0) * p) / d, alpha));
}

}  // namespace

bool ClosedFormReport::contains(std::string_view quantifier) const {
  return std::any_of(values.begin(), values.end(),
                     [&](const ClosedFormValue& v) { return v.quantifier == quantifier; });
}

double ClosedFormReport::get(std::string_view quantifier) const {
  for (const auto& v : values)
    if (v.quantifier == quantifier) return v.value;
  throw Error(ErrorCode::kInvalidArgument,
              "no closed form named " + std::string(quantifier) + " for " + state);
}

void ClosedFormReport::add(std::string quantifier, double value) {
  values.push_back(ClosedFormValue{std::move(quantifier), value});
}

std::string mqi_key(int m) { return "I[" + std::to_string(m) + "]"; }

double block_degeneracy(int n, int m) {
  if (std::abs(m) > n) return 0.0;
  // binomial(2N, N + m), exact in double for the sizes used here
  const int k = std::min(n + m, n - m);
  double g = 1.0;
  for (int i = 1; i <= k; ++i) g = g * (2 * n - k + i) / i;
  return std::round(g);
}

ClosedFormReport single_qubit_forms(const BlochVector& b, const Vec3& n, double alpha) {
  require_open_alpha(alpha);
  require_unit(n);
  if (!(b.r > 0.0 && b.r < 1.0)) throw Error(ErrorCode::kInvalidBloch, "r must lie in (0, 1)");
  const double r = b.r;
  const double x = dot(n, b.direction());
  const double perp = 1.0 - x * x;
  auto c_of = [r](double s) {
    return 1.0 / (std::pow(2.0, -s) * (std::pow(1.0 + r, s) + std::pow(1.0 - r, s)));
  };
  const double ca = c_of(alpha);
  const double cb = c_of(1.0 - alpha);
  const double g = 2.0 * ca * cb - 1.0;

  ClosedFormReport rep;
  rep.state = "qubit";
  rep.generator = "n.sigma/2";
  rep.alpha = alpha;
  rep.inputs = {{"r", r}, {"theta", b.theta}, {"phi", b.phi},
                {"nx", n[0]}, {"ny", n[1]}, {"nz", n[2]}};
  rep.add("c_alpha", ca);
  rep.add("c_one_minus_alpha", cb);
  rep.add(mqi_key(-1), 0.25 * g * perp);
  rep.add(mqi_key(0), 0.5 * (1.0 + g * x * x));
  rep.add(mqi_key(1), 0.25 * g * perp);
  rep.add("F", g * perp);
  rep.add("IL", r * r / 8.0 * perp);
  rep.add("FQ", r * r / 4.0 * perp);
  rep.add("V", 0.25 * (1.0 - r * r * x * x));
  rep.add("I_half", 0.25 * (1.0 - std::sqrt(1.0 - r * r)) * perp);
  return rep;
}

ClosedFormReport bell_diagonal_forms(const BellDiagonalParams& params, const Vec3& n,
                                     double alpha) {
  require_open_alpha(alpha);
  require_unit(n);
  (void)bell_diagonal(params);  // physicality
  std::array<double, 4> v = bell_eigenvalues(params);
  for (double& x : v) x = x <= kZeroSnap ? 0.0 : x;
  const Vec3& a = params.a;

  const auto eta_a = bell_eta(v, alpha);
  const auto eta_b = bell_eta(v, 1.0 - alpha);
  const auto eta_h = bell_eta(v, 0.5);
  double inv_c_h = 0.0;
  for (double x : v) inv_c_h += std::sqrt(x);
  const double c_h = 1.0 / inv_c_h;
  double inv_ca = 0.0, inv_cb = 0.0;
  for (double x : v) {
    inv_ca += safe_pow(x, alpha);
    inv_cb += safe_pow(x, 1.0 - alpha);
  }

  ClosedFormReport rep;
  rep.state = "bell";
  rep.generator = "n.S";
  rep.alpha = alpha;
  rep.inputs = {{"ax", a[0]}, {"ay", a[1]}, {"az", a[2]},
                {"nx", n[0]}, {"ny", n[1]}, {"nz", n[2]}};
  rep.add("c_alpha", 1.0 / inv_ca);
  rep.add("c_one_minus_alpha", 1.0 / inv_cb);
  for (int j = 0; j < 3; ++j) rep.add(std::string("eta_alpha_") + kAxes[j], eta_a[j]);
  for (int j = 0; j < 3; ++j) rep.add(std::string("eta_one_minus_alpha_") + kAxes[j], eta_b[j]);

  // One term per j with the remaining unordered pair {k, l}.
  double f = 0.0, il_sum = 0.0, fq = 0.0, i_half = 0.0;
  for (const auto& [j, k, l] : kCyclic) {
    const double nj2 = n[j] * n[j];
    f += nj2 * (eta_a[k] - eta_a[l]) * (eta_b[k] - eta_b[l]);
    il_sum += (a[j] * a[j] + 2.0 * a[k] * a[l]) * nj2;
    const double num = (a[k] - a[l]) * n[j];
    if (1.0 + a[j] > 1e-14) fq += num * num / (1.0 + a[j]);
    i_half += nj2 * (eta_h[k] - eta_h[l]) * (eta_h[k] - eta_h[l]);
  }
  rep.add("F", f);
  // Generator along a single axis j: the pair is the other two axes.
  for (const auto& [j, k, l] : kCyclic) {
    rep.add(std::string("F_S") + kAxes[j], (eta_a[k] - eta_a[l]) * (eta_b[k] - eta_b[l]));
  }
  // Ordered-permutation sums count each cyclic term twice.
  rep.add("IL", (2.0 * dot(a, a) - 2.0 * il_sum) / 16.0);
  rep.add("FQ", 2.0 * fq / 4.0);
  double v_sum = 0.0;
  for (int j = 0; j < 3; ++j) v_sum += a[j] * n[j] * n[j];
  rep.add("V", 0.5 * (1.0 + v_sum));
  rep.add("I_half", 2.0 * i_half / 8.0 / (c_h * c_h));
  rep.add("I_half_uncorrected", 2.0 * i_half / 8.0);
  return rep;
}

ClosedFormReport family_forms(const MixedFamilyParams& params, double alpha) {
  require_open_alpha(alpha);
  if (params.n < 1) throw Error(ErrorCode::kInvalidArgument, "family needs n >= 1");
  if (params.n > kMaxFamilyQubits) throw Error(ErrorCode::kTooLarge, "family size");
  if (!(params.p > 0.0 && params.p < 1.0)) throw Error(ErrorCode::kInvalidP, "p must lie in (0, 1)");
  const int big_n = params.n;
  const double nn = big_n;
  const double d = static_cast<double>(params.dim());
  const double p = params.p;

  const double ca = family_c(d, p, alpha);
  const double cb = family_c(d, p, 1.0 - alpha);
  const double xa = 1.0 - ca * std::pow(d, 1.0 - alpha) * std::pow(1.0 - p, alpha);
  const double xb = 1.0 - cb * std::pow(d, alpha) * std::pow(1.0 - p, 1.0 - alpha);
  const double xx = xa * xb;
  const double root_gap = std::sqrt(1.0 + (d - 1.0) * p) - std::sqrt(1.0 - p);
  const double qfi_unit = d * p * p / (4.0 * (2.0 + (d - 2.0) * p));

  ClosedFormReport rep;
  rep.state = std::string(to_string(params.family));
  rep.alpha = alpha;
  rep.inputs = {{"n", nn}, {"p", p}};
  rep.add("c_alpha", ca);
  rep.add("c_one_minus_alpha", cb);
  rep.add("xi_alpha", xa);
  rep.add("xi_one_minus_alpha", xb);

  switch (params.family) {
    case Family::kEqualSuperposition: {
      rep.generator = "Sz";
      for (int m = -big_n; m <= big_n; ++m) {
        const double value = m == 0
                                 ? (1.0 + (block_degeneracy(big_n, 0) / d - 1.0) * xx) / d
                                 : block_degeneracy(big_n, m) / (d * d) * xx;
        rep.add(mqi_key(m), value);
      }
      rep.add("F", nn * xx);
      rep.add("IL", nn * p * p / 8.0);
      rep.add("FQ", nn * qfi_unit);
      rep.add("V", nn / 4.0);
      rep.add("I_half", nn / (4.0 * d) * root_gap * root_gap);
      break;
    }
    case Family::kGhz: {
      rep.generator = "Sz";
      for (int m = -big_n; m <= big_n; ++m) {
        double value = 0.0;
        if (m == 0) value = ca * cb - 0.5 * xx;
        if (std::abs(m) == big_n) value += 0.25 * xx;
        rep.add(mqi_key(m), value);
      }
      rep.add("F", nn * nn * xx);
      rep.add("IL", nn * nn * p * p / 8.0);
      rep.add("FQ", nn * nn * qfi_unit);
      rep.add("V", 0.25 * (nn + nn * (nn - 1.0) * p));
      rep.add("V_uncorrected", nn * nn / 4.0);
      rep.add("I_half", nn * nn / (4.0 * d) * root_gap * root_gap);
      break;
    }
    case Family::kW: {
      rep.generator = "Sx";
      rep.add("F", (3.0 * nn - 2.0) / (d - 1.0) * (d * ca * cb - 1.0));
      rep.add("IL", (4.0 + 3.0 * (nn - 2.0)) * p * p / 8.0);
      rep.add("FQ", (3.0 * nn - 2.0) * qfi_unit);
      rep.add("V", 0.25 * (nn + 2.0 * (nn - 1.0) * p));
      rep.add("I_half", (3.0 * nn - 2.0) / (4.0 * d) * root_gap * root_gap);
      break;
    }
  }
  return rep;
}

}  // namespace mqc

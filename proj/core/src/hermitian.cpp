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

#include "mqc/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mqc/error.hpp"

namespace mqc {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p, q) with the unitary J = diag(1, e^{-i arg a_pq}) R, where R
// is the real Jacobi rotation of the phase-stripped 2x2 block.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double mag = std::abs(g);
  if (mag == 0.0) return;
  const Complex phase = g / mag;
  const Complex phase_conj = std::conj(phase);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t d = a.dim();
  for (std::size_t k = 0; k < d; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  for (std::size_t k = 0; k < d; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t k = 0; k < d; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_conj * vkq;
    v(k, q) = s * vkp + c * phase_conj * vkq;
  }
}

}  // namespace

ComplexVector EigenSystem::vector(std::size_t k) const {
  ComplexVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = vectors(i, k);
  return out;
}

EigenSystem eigh(const ComplexMatrix& m, JacobiOptions options) {
  if (!m.is_hermitian(kHermitianTol)) {
    throw Error(ErrorCode::kNotHermitian, "eigh requires ||M - M^dagger||_max <= 1e-10");
  }
  const std::size_t d = m.dim();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < d; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(d);
  const double threshold = options.relative_tolerance * a.frobenius_norm();

  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) rotate(a, v, p, q);
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence,
                "Jacobi sweeps exhausted after " + std::to_string(options.max_sweeps));
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem es{std::vector<double>(d), ComplexMatrix(d)};
  for (std::size_t k = 0; k < d; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < d; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

EigenSystem eigh_psd(const ComplexMatrix& m) {
  EigenSystem es = eigh(m);
  for (double& p : es.values) {
    if (p < -kNegativeClamp) {
      throw Error(ErrorCode::kNotPositive, "eigenvalue " + std::to_string(p) + " < -1e-12");
    }
    if (std::abs(p) <= kZeroSnap) p = 0.0;
  }
  return es;
}

ComplexMatrix reconstruct(const ComplexMatrix& vectors, std::span<const double> values) {
  const std::size_t d = vectors.dim();
  if (values.size() != d) throw Error(ErrorCode::kDimMismatch, "reconstruct");
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double w = values[k];
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const Complex vi = w * vectors(i, k);
      for (std::size_t j = 0; j < d; ++j) out(i, j) += vi * std::conj(vectors(j, k));
    }
  }
  return out;
}

ComplexMatrix reconstruct(const ComplexMatrix& vectors, std::span<const Complex> values) {
  const std::size_t d = vectors.dim();
  if (values.size() != d) throw Error(ErrorCode::kDimMismatch, "reconstruct");
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    const Complex w = values[k];
    for (std::size_t i = 0; i < d; ++i) {
      const Complex vi = w * vectors(i, k);
      for (std::size_t j = 0; j < d; ++j) out(i, j) += vi * std::conj(vectors(j, k));
    }
  }
  return out;
}

ComplexMatrix to_basis(const ComplexMatrix& m, const ComplexMatrix& vectors) {
  return vectors.adjoint() * m * vectors;
}

ComplexMatrix from_basis(const ComplexMatrix& m, const ComplexMatrix& vectors) {
  return vectors * m * vectors.adjoint();
}

ComplexMatrix matrix_power(const EigenSystem& psd, double s) {
  if (!(s > 0.0 && s <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "matrix_power exponent must lie in (0, 1]");
  }
  std::vector<double> powered(psd.dim());
  for (std::size_t k = 0; k < psd.dim(); ++k) {
    const double p = psd.values[k];
    if (p < -kNegativeClamp) throw Error(ErrorCode::kNotPositive, "negative eigenvalue");
    powered[k] = p <= kZeroSnap ? 0.0 : std::pow(p, s);
  }
  return reconstruct(psd.vectors, powered);
}

ComplexMatrix matrix_power(const ComplexMatrix& rho, double s) {
  return matrix_power(eigh_psd(rho), s);
}

ComplexMatrix unitary_from_generator(const EigenSystem& a, double phi) {
  std::vector<Complex> phases(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) phases[k] = std::polar(1.0, -phi * a.values[k]);
  return reconstruct(a.vectors, phases);
}

ComplexMatrix unitary_from_generator(const ComplexMatrix& a, double phi) {
  return unitary_from_generator(eigh(a), phi);
}

ComplexMatrix conjugate(const ComplexMatrix& rho, const ComplexMatrix& u) {
  if (rho.dim() != u.dim()) throw Error(ErrorCode::kDimMismatch, "conjugate");
  if (!u.is_unitary(kUnitaryTol)) throw Error(ErrorCode::kNotUnitary, "conjugate");
  return u * rho * u.adjoint();
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimMismatch, "hs_inner");
  Complex s = 0.0;
  const auto x = a.entries();
  const auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double trace_norm(const ComplexMatrix& a) {
  const EigenSystem es = eigh(a.adjoint() * a);
  double s = 0.0;
  for (double v : es.values) s += std::sqrt(std::max(v, 0.0));
  return s;
}

}  // namespace mqc

// Copyright 2026 The qtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtele/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

Tolerances g_tolerances;

constexpr int kMaxSweeps = 100;
constexpr double kDegenerateGap = 1e-9;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation in the (p, q) plane, zeroing a(p, q).
// J = [[c, s e^{i phi}], [-s e^{-i phi}, c]] with a_pq = |a_pq| e^{i phi}.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q, double negligible) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag <= negligible) return;
  const Complex ph = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex s_ph = s * ph;
  const Complex s_phc = s * std::conj(ph);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s_phc * akq;
    a(k, q) = s_ph * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s_ph * aqk;
    a(q, k) = s_phc * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t k = 0; k < v.rows(); ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s_phc * vkq;
    v(k, q) = s_ph * vkp + c * vkq;
  }
}

EigenDecomposition jacobi(Matrix a, Matrix v) {
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, a.frobenius_norm());
  const double target = 1e-14 * scale;
  // Entries this small cannot move the off-diagonal norm past the target.
  const double negligible = std::max(1e-300, 1e-17 * scale);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q, negligible);
  }

  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = a(i, i).real();

  // Phase convention: first non-negligible component real positive.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, j));
      if (m > kDegenerateGap) {
        const Complex ph = std::conj(v(i, j)) / m;
        for (std::size_t k = 0; k < n; ++k) v(k, j) *= ph;
        v(i, j) = m;
        break;
      }
    }
  }

  auto rounded = [&](std::size_t col, std::size_t row) {
    return std::round(std::abs(v(row, col)) / kDegenerateGap);
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (std::abs(raw[x] - raw[y]) > kDegenerateGap) return raw[x] < raw[y];
    for (std::size_t i = 0; i < n; ++i) {
      const double rx = rounded(x, i), ry = rounded(y, i);
      if (rx != ry) return rx > ry;
    }
    return x < y;
  });

  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = raw[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

void require_hermitian(const Matrix& h, const char* what) {
  if (!h.is_square() || h.hermiticity_error() > g_tolerances.hermitian_input)
    throw InputError(std::string(what) + ": matrix is not Hermitian");
}

}  // namespace

const Tolerances& tolerances() { return g_tolerances; }
void set_tolerances(const Tolerances& t) { g_tolerances = t; }

EigenDecomposition eig_hermitian(const Matrix& h) {
  require_hermitian(h, "eig_hermitian");
  return jacobi(h.hermitian_part(), Matrix::identity(h.rows()));
}

EigenDecomposition eig_hermitian_from(const Matrix& h, const Matrix& basis) {
  require_hermitian(h, "eig_hermitian_from");
  if (basis.rows() != h.rows() || basis.cols() != h.cols())
    throw InputError("eig_hermitian_from: basis shape mismatch");
  const Matrix rotated = (basis.adjoint() * h * basis).hermitian_part();
  auto inner_dec = jacobi(rotated, Matrix::identity(h.rows()));
  // Eigenvectors of h are basis * W; redo the ordering conventions on them.
  const Matrix vecs = basis * inner_dec.vectors;
  const Matrix diag = Matrix::diagonal(std::span<const double>(inner_dec.values));
  // jacobi() on an already diagonal matrix only reapplies the conventions.
  auto dec = jacobi(diag, vecs);
  return dec;
}

Matrix expm_i_hermitian(const Matrix& h) {
  const auto dec = eig_hermitian(h);
  const std::size_t n = h.rows();
  Matrix scaled = dec.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex e = std::polar(1.0, dec.values[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= e;
  }
  return scaled * dec.vectors.adjoint();
}

namespace {

Matrix sqrt_from(const EigenDecomposition& dec) {
  const std::size_t n = dec.values.size();
  Matrix scaled = dec.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    double lam = dec.values[j];
    if (lam < -g_tolerances.psd) throw InputError("sqrtm_psd: matrix has a negative eigenvalue");
    const double r = std::sqrt(std::max(lam, 0.0));
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= r;
  }
  return scaled * dec.vectors.adjoint();
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError(std::string(what) + ": dimension mismatch");
}

// Expectation <s|m|s> where s is the top eigenvector, if the state is pure.
bool pure_overlap(const EigenDecomposition& dec, const Matrix& other, double& out) {
  const std::size_t n = dec.values.size();
  if (dec.values.back() < 1.0 - g_tolerances.equality) return false;
  Vector s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = dec.vectors(i, n - 1);
  out = std::clamp(inner(s, matvec(other, s)).real(), 0.0, 1.0);
  return true;
}

}  // namespace

Matrix sqrtm_psd(const Matrix& a) {
  require_hermitian(a, "sqrtm_psd");
  return sqrt_from(eig_hermitian(a));
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  require_same_shape(rho, sigma, "fidelity");
  const auto dr = eig_hermitian(rho.hermitian_part());
  double f = 0.0;
  if (pure_overlap(dr, sigma, f)) return f;
  const auto ds = eig_hermitian(sigma.hermitian_part());
  if (pure_overlap(ds, rho, f)) return f;

  const Matrix sr = sqrt_from(dr);
  const auto inner_dec = eig_hermitian((sr * sigma * sr).hermitian_part());
  double root_trace = 0.0;
  for (double lam : inner_dec.values) root_trace += std::sqrt(std::max(lam, 0.0));
  return std::clamp(root_trace * root_trace, 0.0, 1.0);
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  require_same_shape(rho, sigma, "trace_distance");
  const auto dec = eig_hermitian((rho - sigma).hermitian_part());
  double s = 0.0;
  for (double lam : dec.values) s += std::abs(lam);
  return 0.5 * s;
}

}  // namespace qtele

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

#include "qtele/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "qtele/errors.hpp"

namespace qtele::kernels {

namespace {

struct TraceOffsets {
  std::vector<std::size_t> kept;    // flat offset of each kept multi-index
  std::vector<std::size_t> traced;  // flat offset of each traced multi-index
};

// Offsets such that full index = kept[a] + traced[t]; the first factor is
// the most significant digit.
TraceOffsets trace_offsets(std::span<const std::size_t> dims,
                           std::span<const std::size_t> keep) {
  const std::size_t n = dims.size();
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t f = n; f-- > 1;) stride[f - 1] = stride[f] * dims[f];

  std::vector<bool> is_kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw InputError("partial_trace: factor index out of range");
    is_kept[k] = true;
  }

  auto enumerate = [&](bool want_kept) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t f = 0; f < n; ++f) {
      if (is_kept[f] != want_kept) continue;
      std::vector<std::size_t> next;
      next.reserve(offsets.size() * dims[f]);
      for (std::size_t base : offsets)
        for (std::size_t d = 0; d < dims[f]; ++d) next.push_back(base + d * stride[f]);
      offsets = std::move(next);
    }
    return offsets;
  };
  return {enumerate(true), enumerate(false)};
}

void check_matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matmul: inner dimensions differ");
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_matmul(a, b);
  const std::size_t n = a.rows(), m = b.cols(), k = a.cols();
  Matrix c(n, m);
  const bool big = n * m * k >= kParallelThreshold;
#pragma omp parallel for collapse(2) schedule(static) if (big)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += a(i, l) * b(l, j);
      c(i, j) = acc;
    }
  }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  const std::size_t rows = a.rows() * br, cols = a.cols() * bc;
  Matrix c(rows, cols);
  const bool big = rows * cols >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t i = r / br, k = r % br;
    Complex* out = &c(r, 0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t l = 0; l < bc; ++l) out[j * bc + l] = aij * b(k, l);
    }
  }
  return c;
}

Matrix partial_trace(const Matrix& rho, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep) {
  const auto off = trace_offsets(dims, keep);
  const std::size_t K = off.kept.size(), T = off.traced.size();
  Matrix out(K, K);
  const bool big = K * K * T >= kParallelThreshold;
#pragma omp parallel for collapse(2) schedule(static) if (big)
  for (std::size_t a = 0; a < K; ++a) {
    for (std::size_t b = 0; b < K; ++b) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < T; ++t)
        acc += rho(off.kept[a] + off.traced[t], off.kept[b] + off.traced[t]);
      out(a, b) = acc;
    }
  }
  return out;
}

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_matmul(a, b);
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, j);
      c(i, j) = acc;
    }
  }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

// Direct multi-index summation: every full index pair is decoded into digits
// and contributes when the traced digits agree.
Matrix partial_trace(const Matrix& rho, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep) {
  const std::size_t n = dims.size();
  std::vector<bool> is_kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw InputError("partial_trace: factor index out of range");
    is_kept[k] = true;
  }
  std::size_t kept_dim = 1;
  for (std::size_t f = 0; f < n; ++f)
    if (is_kept[f]) kept_dim *= dims[f];

  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(n);
    for (std::size_t f = n; f-- > 0;) {
      d[f] = idx % dims[f];
      idx /= dims[f];
    }
    return d;
  };
  auto kept_index = [&](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < n; ++f)
      if (is_kept[f]) idx = idx * dims[f] + d[f];
    return idx;
  };

  Matrix out(kept_dim, kept_dim);
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    const auto dr = digits(r);
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      const auto dc = digits(c);
      bool match = true;
      for (std::size_t f = 0; f < n && match; ++f)
        if (!is_kept[f] && dr[f] != dc[f]) match = false;
      if (match) out(kept_index(dr), kept_index(dc)) += rho(r, c);
    }
  }
  return out;
}

}  // namespace serial

}  // namespace qtele::kernels

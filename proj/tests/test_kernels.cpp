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


#include <omp.h>

#include <vector>

#include "doctest.h"
#include "qtele/kernels.hpp"
#include "support.hpp"

using namespace qtele;
using qtele::testing::Rng;

namespace {

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = qtele::testing::gaussian_complex(rng);
  return m;
}

// Run with several threads even on a single-core host.
struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("parallel matmul is bit-identical to the serial reference") {
  Threads t(4);
  Rng rng(21);
  for (std::size_t n : {3u, 17u, 64u, 96u}) {
    const Matrix a = random_matrix(rng, n, n + 1), b = random_matrix(rng, n + 1, n);
    CHECK(kernels::matmul(a, b) == kernels::serial::matmul(a, b));
  }
}

TEST_CASE("parallel kron is bit-identical to the serial reference") {
  Threads t(4);
  Rng rng(22);
  const Matrix a = random_matrix(rng, 8, 8), b = random_matrix(rng, 16, 16);
  CHECK(kernels::kron(a, b) == kernels::serial::kron(a, b));
  const Matrix c = random_matrix(rng, 2, 3), d = random_matrix(rng, 3, 2);
  const Matrix k = kernels::kron(c, d);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
  CHECK(k(4, 1) == c(1, 0) * d(1, 1));
}

TEST_CASE("parallel partial trace is bit-identical to the serial reference") {
  Threads t(4);
  Rng rng(23);
  const std::vector<std::size_t> dims{2, 2, 2, 2, 2, 2, 2};
  const Matrix rho = random_matrix(rng, 128, 128);
  const std::vector<std::vector<std::size_t>> keeps{{0}, {3}, {6}, {0, 6}, {1, 2, 5}, {0, 1, 2, 3, 4, 5}};
  for (const auto& keep : keeps)
    CHECK(kernels::partial_trace(rho, dims, keep) == kernels::serial::partial_trace(rho, dims, keep));
  const std::vector<std::size_t> mixed{3, 2, 4};
  const Matrix m = random_matrix(rng, 24, 24);
  const std::vector<std::size_t> keep{0, 2};
  CHECK(kernels::partial_trace(m, mixed, keep) == kernels::serial::partial_trace(m, mixed, keep));
}

TEST_CASE("matmul agrees with a textbook triple loop") {
  Rng rng(24);
  const Matrix a = random_matrix(rng, 5, 4), b = random_matrix(rng, 4, 3);
  const Matrix c = kernels::matmul(a, b);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      CHECK(std::abs(c(i, j) - s) < 1e-14);
    }
}

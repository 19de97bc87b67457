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


// Seeded random states and operators for tests.
#pragma once

#include <cmath>
#include <random>

#include "qtele/density.hpp"
#include "qtele/linalg.hpp"
#include "qtele/states.hpp"

namespace qtele::testing {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline PureState random_pure(Rng& rng, std::size_t dim) {
  Vector v(dim);
  for (auto& z : v) z = gaussian_complex(rng);
  return PureState::normalized(v);
}

// Ginibre ensemble: G G^dagger / tr. Full rank with probability 1.
inline DensityMatrix random_density(Rng& rng, const SubsystemLayout& layout) {
  const std::size_t d = layout.total();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = gaussian_complex(rng);
  Matrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix(rho.hermitian_part(), layout);
}

inline Matrix random_hermitian(Rng& rng, std::size_t d) {
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = gaussian_complex(rng);
  return g.hermitian_part();
}

inline Matrix random_unitary(Rng& rng, std::size_t d) { return expm_i_hermitian(random_hermitian(rng, d)); }

inline QubitBasis random_basis(Rng& rng) {
  const PureState b0 = random_pure(rng, 2);
  // The orthogonal complement of (a, b) is (-conj b, conj a).
  const PureState b1({-std::conj(b0[1]), std::conj(b0[0])});
  return QubitBasis(b0, b1);
}

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace qtele::testing

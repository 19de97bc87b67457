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

#pragma once

#include <vector>

#include "qtele/matrix.hpp"

namespace qtele {

/// Numerical slack shared by every module. Set once at startup (the CLI
/// reads it from the TOLERANCE environment variable); read everywhere else.
struct Tolerances {
  double equality = 1e-12;  // entrywise equality, trace and Hermiticity of states
  double psd = 1e-10;       // smallest eigenvalue accepted as "nonnegative"
  double hermitian_input = 1e-10;
};

const Tolerances& tolerances();
void set_tolerances(const Tolerances& t);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // orthonormal columns, same order as values
};

/// Cyclic complex Jacobi. Degenerate eigenvalues (within 1e-9) are ordered by
/// the lexicographically larger rounded component magnitudes first, and each
/// eigenvector has its first non-negligible component real and positive.
EigenDecomposition eig_hermitian(const Matrix& h);

/// Same contract, but starts from an approximate eigenbasis. When `basis`
/// nearly diagonalizes h, a sweep or two suffices.
EigenDecomposition eig_hermitian_from(const Matrix& h, const Matrix& basis);

/// exp(iH) for Hermitian H.
Matrix expm_i_hermitian(const Matrix& h);

/// Principal square root of a PSD matrix; eigenvalues in [-psd slack, 0) are
/// clamped to zero, anything more negative is an InputError.
Matrix sqrtm_psd(const Matrix& a);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0,1].
double fidelity(const Matrix& rho, const Matrix& sigma);

/// Half the trace norm of rho - sigma.
double trace_distance(const Matrix& rho, const Matrix& sigma);

}  // namespace qtele

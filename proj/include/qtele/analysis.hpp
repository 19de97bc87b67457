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

#include <cstddef>
#include <span>
#include <vector>

#include "qtele/density.hpp"
#include "qtele/states.hpp"

namespace qtele {

struct CommutationResult {
  bool commute;
  double norm;  // Frobenius norm of [rho1, rho2]
};

CommutationResult commutes(const DensityMatrix& rho1, const DensityMatrix& rho2, double tol = 1e-10);

/// Orthonormal basis diagonalizing every state in the (pairwise commuting)
/// set. Ordered so b0 has the larger |<0|b>|, ties going to the larger real
/// second component; maximally mixed inputs give the computational basis.
/// Throws NonCommutingError if any pair fails to commute within 1e-10.
QubitBasis common_eigenbasis(std::span<const DensityMatrix> states);
QubitBasis common_eigenbasis(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// rho_j = lambda_j P[psi] + (1 - lambda_j) P[phi], j = 1, 2, for noncommuting
/// qubits. psi and phi are where the chord through the two Bloch vectors
/// meets the sphere; psi sits at the smaller chord parameter.
struct DecompositionResult {
  PureState psi;
  PureState phi;
  BlochVector psi_bloch;
  BlochVector phi_bloch;
  double lambda1;
  double lambda2;
  double overlap;  // |<psi|phi>|
  double t_minus;
  double t_plus;
  double reconstruction_error;  // max trace distance over both inputs
  bool ill_conditioned;         // commutator norm below 1e-6
};

/// Throws CommutingError when the commutator norm is at most 1e-10.
DecompositionResult noncommuting_decomposition(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Transpose of one factor of a two-factor state.
Matrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);
Matrix partial_transpose(const Matrix& rho, std::size_t dim_a, std::size_t dim_b, std::size_t subsystem);

struct PptReport {
  double min_eigenvalue;
  double negativity;
  bool separable;  // exact for 2 x 2: PPT iff separable
};

/// Two-qubit states only.
PptReport ppt_report(const DensityMatrix& rho);

/// Sum of |negative eigenvalues| of the partial transpose on B.
double negativity(const Matrix& rho, std::size_t dim_a, std::size_t dim_b);

enum class Side { A, B };

/// Teleports the commuting side of every set member through the classical
/// channel in the common eigenbasis of that side's marginals. Outputs are
/// separable with both marginals intact. Throws NonCommutingMarginalsError
/// when the side marginals do not pairwise commute.
std::vector<DensityMatrix> disentangle_by_teleport(std::span<const DensityMatrix> set, Side side);

struct UnitarityCheck {
  bool consistent;
  double violation;  // |<psi|phi>| * |1 - <M0|M1>|
};

/// Whether U(psi x M) = psi x M0, U(phi x M) = phi x M1 can come from one
/// unitary: inner products must survive, which for nonorthogonal psi, phi
/// forces <M0|M1> = 1.
UnitarityCheck unitarity_forces_equal_ancillas(const PureState& psi, const PureState& phi,
                                               const PureState& m0, const PureState& m1);

}  // namespace qtele

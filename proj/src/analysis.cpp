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

#include "qtele/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qtele/errors.hpp"
#include "qtele/linalg.hpp"
#include "qtele/protocols.hpp"

namespace qtele {

namespace {

constexpr double kCommuteTol = 1e-10;
constexpr double kIllConditioned = 1e-6;

void require_qubit_pair(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.dim() != 2 || b.dim() != 2) throw InputError(std::string(what) + ": inputs must be qubits");
}

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.layout() != SubsystemLayout::qubits(2))
    throw InputError(std::string(what) + ": expected a two-qubit layout");
}

QubitBasis ordered_basis(Vector u, Vector v) {
  u = canonical_phase(std::move(u));
  v = canonical_phase(std::move(v));
  const double du = std::abs(u[0]), dv = std::abs(v[0]);
  bool swap = false;
  if (std::abs(du - dv) > 1e-9)
    swap = dv > du;
  else
    swap = v[1].real() > u[1].real();
  if (swap) std::swap(u, v);
  return {PureState::normalized(std::move(u)), PureState::normalized(std::move(v))};
}

}  // namespace

CommutationResult commutes(const DensityMatrix& rho1, const DensityMatrix& rho2, double tol) {
  if (rho1.dim() != rho2.dim()) throw InputError("commutes: dimension mismatch");
  const double n = commutator(rho1.matrix(), rho2.matrix()).frobenius_norm();
  return {n <= tol, n};
}

QubitBasis common_eigenbasis(std::span<const DensityMatrix> states) {
  if (states.empty()) throw InputError("common_eigenbasis: empty set");
  for (const auto& s : states)
    if (s.dim() != 2) throw InputError("common_eigenbasis: inputs must be qubits");
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      if (!commutes(states[i], states[j], kCommuteTol).commute)
        throw NonCommutingError("common_eigenbasis: states do not commute");

  // Diagonalize a generic combination; a few weightings guard against an
  // accidental cancellation to a multiple of the identity.
  static constexpr std::array<double, 3> kWeights{0.6180339887498949, 0.4142135623730950,
                                                  0.7320508075688772};
  EigenDecomposition best;
  double best_gap = -1.0;
  for (double w : kWeights) {
    Matrix combo(2, 2);
    double t = 1.0;
    for (const auto& s : states) {
      combo += t * s.matrix();
      t *= w;
    }
    auto dec = eig_hermitian(combo.hermitian_part());
    const double gap = dec.values[1] - dec.values[0];
    if (gap > best_gap) {
      best_gap = gap;
      best = std::move(dec);
    }
  }
  if (best_gap <= kCommuteTol) return QubitBasis::computational();
  Vector u{best.vectors(0, 0), best.vectors(1, 0)};
  Vector v{best.vectors(0, 1), best.vectors(1, 1)};
  return ordered_basis(std::move(u), std::move(v));
}

QubitBasis common_eigenbasis(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_qubit_pair(rho1, rho2, "common_eigenbasis");
  const std::array<DensityMatrix, 2> pair{rho1, rho2};
  return common_eigenbasis(pair);
}

DecompositionResult noncommuting_decomposition(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_qubit_pair(rho1, rho2, "noncommuting_decomposition");
  const auto comm = commutes(rho1, rho2, kCommuteTol);
  if (comm.commute)
    throw CommutingError("noncommuting_decomposition: inputs commute; use common_eigenbasis");

  const BlochVector r1 = bloch_from_qubit(rho1);
  const BlochVector r2 = bloch_from_qubit(rho2);
  const BlochVector d = r2 - r1;
  // |r1 + t d|^2 = 1  <=>  a t^2 + 2 b t + c = 0, c <= 0 so the roots bracket 0.
  const double a = d.dot(d);
  const double b = r1.dot(d);
  const double c = std::min(r1.dot(r1) - 1.0, 0.0);
  const double root = std::sqrt(std::max(b * b - a * c, 0.0));
  const double q = -(b + (b >= 0.0 ? root : -root));
  double t1 = q / a;
  double t2 = q != 0.0 ? c / q : -t1;
  const double t_minus = std::min(t1, t2);
  const double t_plus = std::max(t1, t2);

  const BlochVector n_psi = r1 + t_minus * d;
  const BlochVector n_phi = r1 + t_plus * d;
  auto lambda = [&](double tj) { return std::clamp((t_plus - tj) / (t_plus - t_minus), 0.0, 1.0); };

  PureState psi = pure_from_bloch(n_psi);
  PureState phi = pure_from_bloch(n_phi);
  const double l1 = lambda(0.0);
  const double l2 = lambda(1.0);
  const Matrix p_psi = Matrix::projector(psi.amplitudes());
  const Matrix p_phi = Matrix::projector(phi.amplitudes());
  const double err = std::max(trace_distance(l1 * p_psi + (1.0 - l1) * p_phi, rho1.matrix()),
                              trace_distance(l2 * p_psi + (1.0 - l2) * p_phi, rho2.matrix()));
  const double overlap = std::abs(inner(psi.amplitudes(), phi.amplitudes()));

  return {std::move(psi), std::move(phi), bloch_from_qubit(p_psi), bloch_from_qubit(p_phi),
          l1, l2, overlap, t_minus, t_plus, err, comm.norm < kIllConditioned};
}

Matrix partial_transpose(const Matrix& rho, std::size_t dim_a, std::size_t dim_b,
                         std::size_t subsystem) {
  if (subsystem > 1) throw InputError("partial_transpose: subsystem must be 0 or 1");
  if (rho.rows() != dim_a * dim_b || !rho.is_square())
    throw InputError("partial_transpose: layout does not match matrix");
  Matrix out(rho.rows(), rho.cols());
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_b; ++b)
      for (std::size_t a2 = 0; a2 < dim_a; ++a2)
        for (std::size_t b2 = 0; b2 < dim_b; ++b2) {
          const std::size_t r = a * dim_b + b, c = a2 * dim_b + b2;
          out(r, c) = subsystem == 1 ? rho(a * dim_b + b2, a2 * dim_b + b)
                                     : rho(a2 * dim_b + b, a * dim_b + b2);
        }
  return out;
}

Matrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  if (rho.layout().factors() != 2) throw InputError("partial_transpose: expected a bipartite layout");
  return partial_transpose(rho.matrix(), rho.layout().dim(0), rho.layout().dim(1), subsystem);
}

double negativity(const Matrix& rho, std::size_t dim_a, std::size_t dim_b) {
  const auto dec = eig_hermitian(partial_transpose(rho, dim_a, dim_b, 1).hermitian_part());
  double neg = 0.0;
  for (double lam : dec.values)
    if (lam < 0.0) neg -= lam;
  return neg;
}

PptReport ppt_report(const DensityMatrix& rho) {
  require_two_qubits(rho, "ppt_report");
  const auto dec = eig_hermitian(partial_transpose(rho, 1).hermitian_part());
  double neg = 0.0;
  for (double lam : dec.values)
    if (lam < 0.0) neg -= lam;
  const double min_eig = dec.values.front();
  return {min_eig, neg, min_eig >= -tolerances().psd};
}

std::vector<DensityMatrix> disentangle_by_teleport(std::span<const DensityMatrix> set, Side side) {
  if (set.empty()) throw InputError("disentangle_by_teleport: empty set");
  const std::size_t factor = side == Side::A ? 0 : 1;
  std::vector<DensityMatrix> marginals;
  for (const auto& rho : set) {
    require_two_qubits(rho, "disentangle_by_teleport");
    marginals.push_back(partial_trace(rho, {factor}));
  }
  for (std::size_t i = 0; i < marginals.size(); ++i)
    for (std::size_t j = i + 1; j < marginals.size(); ++j)
      if (!commutes(marginals[i], marginals[j], kCommuteTol).commute)
        throw NonCommutingMarginalsError(
            "disentangle_by_teleport: side marginals do not commute, so no operation on that "
            "side alone can disentangle the set exactly");

  const QubitBasis basis = common_eigenbasis(marginals);
  std::vector<DensityMatrix> out;
  out.reserve(set.size());
  for (const auto& rho : set) out.push_back(teleport_subsystem(rho, factor, basis));
  return out;
}

UnitarityCheck unitarity_forces_equal_ancillas(const PureState& psi, const PureState& phi,
                                               const PureState& m0, const PureState& m1) {
  if (psi.dim() != phi.dim() || m0.dim() != m1.dim())
    throw InputError("unitarity_forces_equal_ancillas: dimension mismatch");
  const double ov = std::abs(inner(psi.amplitudes(), phi.amplitudes()));
  if (ov <= tolerances().equality)
    throw InputError("unitarity_forces_equal_ancillas: psi and phi are orthogonal");
  const double violation = ov * std::abs(1.0 - inner(m0.amplitudes(), m1.amplitudes()));
  return {violation <= tolerances().equality, violation};
}

}  // namespace qtele

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

#include "qtele/states.hpp"

#include <cmath>

#include "qtele/errors.hpp"
#include "qtele/linalg.hpp"

namespace qtele {

double BlochVector::length() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::cross(const BlochVector& o) const {
  return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
}

DensityMatrix qubit_from_bloch(const BlochVector& r) {
  if (!(r.length() <= 1.0 + tolerances().equality))
    throw InputError("qubit_from_bloch: Bloch vector longer than 1");
  Matrix m{{0.5 * (1.0 + r.z), Complex(0.5 * r.x, -0.5 * r.y)},
           {Complex(0.5 * r.x, 0.5 * r.y), 0.5 * (1.0 - r.z)}};
  return DensityMatrix(std::move(m));
}

BlochVector bloch_from_qubit(const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw InputError("bloch_from_qubit: not a qubit");
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

BlochVector bloch_from_qubit(const DensityMatrix& rho) { return bloch_from_qubit(rho.matrix()); }

Vector canonical_phase(Vector v) {
  for (const auto& z : v) {
    const double m = std::abs(z);
    if (m > 1e-12) {
      const Complex ph = std::conj(z) / m;
      for (auto& w : v) w *= ph;
      break;
    }
  }
  // Exact zero imaginary part on the leading component.
  for (auto& z : v) {
    if (std::abs(z) > 1e-12) {
      z = std::abs(z);
      break;
    }
  }
  return v;
}

PureState pure_from_bloch(const BlochVector& r) {
  const double len = r.length();
  if (!(len > 0.0)) throw InputError("pure_from_bloch: zero vector");
  const double x = r.x / len, y = r.y / len, z = r.z / len;
  Vector v(2);
  if (z >= 0.0) {
    v[0] = std::sqrt((1.0 + z) / 2.0);
    v[1] = Complex(x, y) / std::sqrt(2.0 * (1.0 + z));
  } else {
    v[0] = Complex(x, -y) / std::sqrt(2.0 * (1.0 - z));
    v[1] = std::sqrt((1.0 - z) / 2.0);
  }
  return PureState::normalized(canonical_phase(std::move(v)));
}

QubitBasis::QubitBasis(PureState b0, PureState b1)
    : b0_(PureState::normalized(canonical_phase(b0.amplitudes()))),
      b1_(PureState::normalized(canonical_phase(b1.amplitudes()))) {
  if (b0_.dim() != 2 || b1_.dim() != 2) throw InputError("QubitBasis: vectors must be 2-dimensional");
  if (std::abs(inner(b0_.amplitudes(), b1_.amplitudes())) > tolerances().equality)
    throw InputError("QubitBasis: vectors are not orthogonal");
}

QubitBasis QubitBasis::computational() { return {kets::zero(), kets::one()}; }

QubitBasis QubitBasis::hadamard() { return {kets::plus(), kets::minus()}; }

Matrix QubitBasis::projector(std::size_t i) const {
  return Matrix::projector((*this)[i].amplitudes());
}

Matrix QubitBasis::flip() const {
  return Matrix::outer(b0_.amplitudes(), b1_.amplitudes()) +
         Matrix::outer(b1_.amplitudes(), b0_.amplitudes());
}

Matrix QubitBasis::to_basis() const {
  return {{b0_[0], b1_[0]}, {b0_[1], b1_[1]}};
}

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::classical: return "classical";
    case ChannelKind::bell: return "bell";
    case ChannelKind::custom: return "custom";
  }
  return "custom";
}

DensityMatrix commuting_family(double w, const QubitBasis& basis) {
  if (!(w >= 0.0 && w <= 1.0)) throw InputError("commuting_family: weight outside [0, 1]");
  return DensityMatrix(w * basis.projector(0) + (1.0 - w) * basis.projector(1));
}

ChannelState classical_channel(const QubitBasis& basis) {
  const auto& b0 = basis.b0().amplitudes();
  const auto& b1 = basis.b1().amplitudes();
  Matrix m = 0.5 * Matrix::projector(kron(std::span(b0), std::span(b0))) +
             0.5 * Matrix::projector(kron(std::span(b1), std::span(b1)));
  return {DensityMatrix(std::move(m), SubsystemLayout::qubits(2)), basis, ChannelKind::classical};
}

PureState bell_vector(int k) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (k) {
    case 0: return PureState::normalized({h, 0.0, 0.0, h});
    case 1: return PureState::normalized({h, 0.0, 0.0, -h});
    case 2: return PureState::normalized({0.0, h, h, 0.0});
    case 3: return PureState::normalized({0.0, h, -h, 0.0});
    default: throw InputError("bell_state: index must be 0..3");
  }
}

DensityMatrix bell_state(int k) { return bell_vector(k).density(SubsystemLayout::qubits(2)); }

std::array<PureState, 3> family_F(const PureState& alpha, const PureState& beta) {
  if (alpha.dim() != 2 || beta.dim() != 2) throw InputError("family_F: alpha and beta must be qubits");
  const double overlap = std::abs(inner(alpha.amplitudes(), beta.amplitudes()));
  const double tol = tolerances().equality;
  if (overlap <= tol) throw InputError("family_F: alpha and beta are orthogonal");
  if (overlap >= 1.0 - tol) throw InputError("family_F: alpha and beta are the same state");

  auto first = kron(kets::zero(), alpha);
  auto second = kron(kets::one(), beta);
  Vector sum(4);
  for (std::size_t i = 0; i < 4; ++i) sum[i] = first[i] + second[i];
  return {first, second, PureState::normalized(std::move(sum))};
}

namespace kets {
PureState zero() { return PureState({1.0, 0.0}); }
PureState one() { return PureState({0.0, 1.0}); }
PureState plus() { return PureState::normalized({1.0, 1.0}); }
PureState minus() { return PureState::normalized({1.0, -1.0}); }
}  // namespace kets

}  // namespace qtele

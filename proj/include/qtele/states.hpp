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

#include <array>
#include <string>

#include "qtele/density.hpp"

namespace qtele {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double length() const;
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  BlochVector cross(const BlochVector& o) const;
  friend BlochVector operator+(const BlochVector& a, const BlochVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend BlochVector operator-(const BlochVector& a, const BlochVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend BlochVector operator*(double s, const BlochVector& a) { return {s * a.x, s * a.y, s * a.z}; }
};

/// rho = (I + x sx + y sy + z sz) / 2. Throws InputError if |r| > 1 + 1e-12.
DensityMatrix qubit_from_bloch(const BlochVector& r);
BlochVector bloch_from_qubit(const DensityMatrix& rho);
BlochVector bloch_from_qubit(const Matrix& rho);

/// Pure state on the Bloch sphere point r (|r| = 1), in the phase
/// convention below.
PureState pure_from_bloch(const BlochVector& r);

/// Makes the first non-negligible amplitude real and positive.
Vector canonical_phase(Vector v);

/// Orthonormal qubit basis {b0, b1}. Both vectors are stored in canonical
/// phase, so equal bases compare equal.
class QubitBasis {
 public:
  /// Throws InputError unless b0, b1 are orthonormal 2-vectors.
  QubitBasis(PureState b0, PureState b1);

  static QubitBasis computational();
  /// {|+>, |->}
  static QubitBasis hadamard();

  const PureState& b0() const { return b0_; }
  const PureState& b1() const { return b1_; }
  const PureState& operator[](std::size_t i) const { return i == 0 ? b0_ : b1_; }

  Matrix projector(std::size_t i) const;
  /// |b0><b1| + |b1><b0|: the bit flip expressed in this basis.
  Matrix flip() const;
  /// Rotation mapping |0>,|1> to b0,b1.
  Matrix to_basis() const;

 private:
  PureState b0_;
  PureState b1_;
};

enum class ChannelKind { classical, bell, custom };

std::string to_string(ChannelKind kind);

struct ChannelState {
  DensityMatrix state;  // layout [2, 2]
  QubitBasis basis;
  ChannelKind kind;
};

/// w P[b0] + (1 - w) P[b1].
DensityMatrix commuting_family(double w, const QubitBasis& basis);

/// 1/2 P[b0 b0] + 1/2 P[b1 b1]. The weights are fixed at one half: with any
/// other split Bob's output would depend on the split.
ChannelState classical_channel(const QubitBasis& basis);

/// Bell vectors, k = 0..3: Phi+, Phi-, Psi+, Psi-.
PureState bell_vector(int k);
DensityMatrix bell_state(int k);

/// {|0 alpha>, |1 beta>, (|0 alpha> + |1 beta>)/sqrt 2}, each on [2, 2].
/// Requires 0 < |<alpha|beta>| < 1.
std::array<PureState, 3> family_F(const PureState& alpha, const PureState& beta);

namespace kets {
PureState zero();
PureState one();
PureState plus();
PureState minus();
}  // namespace kets

}  // namespace qtele

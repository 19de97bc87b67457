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
#include <string>
#include <vector>

#include "qtele/density.hpp"
#include "qtele/states.hpp"

namespace qtele {

struct Branch {
  std::string outcome;     // measurement label, e.g. "P1"
  double probability;
  std::string correction;  // operator Bob applies, e.g. "I", "X"
  DensityMatrix bob_state; // Bob's normalized state after the correction
};

/// Record of one protocol run. Measurements are simulated with exact
/// projector algebra, so probabilities are exact up to rounding.
struct ProtocolTranscript {
  DensityMatrix input;
  std::string channel;
  std::vector<Branch> branches;
  DensityMatrix averaged_output;
  double fidelity_to_input;
  int classical_bits;  // bits Alice sends Bob per run
};

/// Teleports a qubit over 1/2 P[b0 b0] + 1/2 P[b1 b1]. Alice measures
/// {P1 = P[b0 b0] + P[b1 b1], P2 = P[b0 b1] + P[b1 b0]} on (input, her half);
/// on P2 Bob flips b0 <-> b1. Exact for inputs diagonal in the basis; any
/// other input comes out dephased in that basis.
ProtocolTranscript teleport_commuting(const DensityMatrix& input, const QubitBasis& basis);

/// Runs teleport_commuting as a channel on one qubit factor of a joint
/// state, averaging over outcomes. The teleported qubit takes the original
/// factor's place in the layout.
DensityMatrix teleport_subsystem(const DensityMatrix& joint, std::size_t factor,
                                 const QubitBasis& basis);

/// 1 -> n broadcast with blank state 1/2 P[b0...b0] + 1/2 P[b1...b1] on n-1
/// qubits. On P2 every blank qubit is flipped. Returns the n-qubit state
/// (input qubit first); each single-qubit marginal equals the input.
/// Throws NonCommutingInputError if the input is not diagonal in the basis.
DensityMatrix broadcast(const DensityMatrix& input, std::size_t n, const QubitBasis& basis);

/// Bell-measurement teleportation over Phi+ with Pauli corrections.
ProtocolTranscript standard_teleport(const PureState& input);

}  // namespace qtele

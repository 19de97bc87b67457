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

#include "qtele/protocols.hpp"

#include <array>
#include <cmath>

#include "qtele/errors.hpp"
#include "qtele/kernels.hpp"
#include "qtele/linalg.hpp"

namespace qtele {

namespace {

// Below this a branch is treated as impossible and dropped from the record.
constexpr double kNullBranch = 1e-15;

Matrix commuting_projector(const QubitBasis& basis, bool equal_labels) {
  const auto& b0 = basis.b0().amplitudes();
  const auto& b1 = basis.b1().amplitudes();
  if (equal_labels)
    return Matrix::projector(kron(std::span(b0), std::span(b0))) +
           Matrix::projector(kron(std::span(b1), std::span(b1)));
  return Matrix::projector(kron(std::span(b0), std::span(b1))) +
         Matrix::projector(kron(std::span(b1), std::span(b0)));
}

void require_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 2) throw InputError(std::string(what) + ": input must be a single qubit");
}

DensityMatrix normalized_state(const Matrix& unnormalized, double p, const SubsystemLayout& layout) {
  return DensityMatrix((unnormalized * (1.0 / p)).hermitian_part(), layout);
}

Matrix weighted_sum(const std::vector<Branch>& branches) {
  Matrix avg(2, 2);
  for (const auto& b : branches) avg += b.probability * b.bob_state.matrix();
  return avg.hermitian_part();
}

// Sum over both outcomes of the corrected, unnormalized post-measurement
// state on the full space.
Matrix commuting_round(const Matrix& full, const SubsystemLayout& layout,
                       std::span<const std::size_t> measured, const Matrix& flip_full,
                       const QubitBasis& basis) {
  const Matrix p1 = expand_operator(commuting_projector(basis, true), measured, layout);
  const Matrix p2 = expand_operator(commuting_projector(basis, false), measured, layout);
  return conjugate(p1, full) + conjugate(flip_full * p2, full);
}

}  // namespace

ProtocolTranscript teleport_commuting(const DensityMatrix& input, const QubitBasis& basis) {
  require_qubit(input, "teleport_commuting");
  const auto channel = classical_channel(basis);
  const auto layout = SubsystemLayout::qubits(3);  // A1 (input), A2, B
  const Matrix full = kron(input.matrix(), channel.state.matrix());
  const std::array<std::size_t, 2> alice{0, 1};
  const std::array<std::size_t, 1> bob{2};
  const std::array<std::size_t, 1> keep_bob{2};

  const Matrix flip_b = expand_operator(basis.flip(), bob, layout);
  struct Outcome {
    const char* label;
    bool equal_labels;
    const char* correction;
  };
  const std::array<Outcome, 2> outcomes{{{"P1", true, "I"}, {"P2", false, "X"}}};

  std::vector<Branch> branches;
  for (const auto& o : outcomes) {
    const Matrix proj = expand_operator(commuting_projector(basis, o.equal_labels), alice, layout);
    Matrix post = conjugate(proj, full);
    const double p = post.trace().real();
    if (p < kNullBranch) continue;
    if (!o.equal_labels) post = conjugate(flip_b, post);
    const Matrix bob_raw = kernels::partial_trace(post, layout.dims(), keep_bob);
    branches.push_back({o.label, p, o.correction, normalized_state(bob_raw, p, SubsystemLayout({2}))});
  }

  DensityMatrix avg(weighted_sum(branches));
  const double f = fidelity(input, avg);
  return {input, to_string(channel.kind), std::move(branches), std::move(avg), f, 1};
}

DensityMatrix teleport_subsystem(const DensityMatrix& joint, std::size_t factor,
                                 const QubitBasis& basis) {
  const auto& jl = joint.layout();
  if (factor >= jl.factors()) throw InputError("teleport_subsystem: factor index out of range");
  if (jl.dim(factor) != 2) throw InputError("teleport_subsystem: factor is not a qubit");

  const std::size_t n = jl.factors();
  const auto channel = classical_channel(basis);
  const auto layout = jl.concat(channel.state.layout());  // ..., A2 = n, B = n + 1
  const Matrix full = kron(joint.matrix(), channel.state.matrix());

  const std::array<std::size_t, 2> measured{factor, n};
  const std::array<std::size_t, 1> bob{n + 1};
  const Matrix flip_b = expand_operator(basis.flip(), bob, layout);
  const Matrix after = commuting_round(full, layout, measured, flip_b, basis);

  std::vector<std::size_t> keep;
  for (std::size_t f = 0; f < n + 2; ++f)
    if (f != factor && f != n) keep.push_back(f);
  const auto reduced_layout = layout.restricted(keep);
  const Matrix reduced = kernels::partial_trace(after, layout.dims(), keep);

  // Bob's qubit is last in `reduced`; move it back to `factor`.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i < factor ? i : (i == factor ? n - 1 : i - 1);
  return DensityMatrix(permute_factors(reduced, reduced_layout, perm).hermitian_part(), jl);
}

DensityMatrix broadcast(const DensityMatrix& input, std::size_t n, const QubitBasis& basis) {
  require_qubit(input, "broadcast");
  if (n < 2) throw InputError("broadcast: need at least two parties");
  const Complex off = inner(basis.b0().amplitudes(), matvec(input.matrix(), basis.b1().amplitudes()));
  if (std::abs(off) > tolerances().psd)
    throw NonCommutingInputError("broadcast: input is not diagonal in the channel basis");

  const std::size_t blanks = n - 1;
  Vector all0{1.0}, all1{1.0};
  for (std::size_t i = 0; i < blanks; ++i) {
    all0 = kron(std::span<const Complex>(all0), std::span(basis.b0().amplitudes()));
    all1 = kron(std::span<const Complex>(all1), std::span(basis.b1().amplitudes()));
  }
  const Matrix blank = 0.5 * Matrix::projector(all0) + 0.5 * Matrix::projector(all1);

  const auto layout = SubsystemLayout::qubits(n);
  const Matrix full = kron(input.matrix(), blank);

  Matrix flips = basis.flip();
  for (std::size_t i = 1; i < blanks; ++i) flips = kron(flips, basis.flip());
  std::vector<std::size_t> blank_factors(blanks);
  for (std::size_t i = 0; i < blanks; ++i) blank_factors[i] = i + 1;
  const Matrix flip_all = expand_operator(flips, blank_factors, layout);

  const std::array<std::size_t, 2> measured{0, 1};
  const Matrix out = commuting_round(full, layout, measured, flip_all, basis);
  return DensityMatrix(out.hermitian_part(), layout);
}

ProtocolTranscript standard_teleport(const PureState& input) {
  if (input.dim() != 2) throw InputError("standard_teleport: input must be a qubit");
  const DensityMatrix in = input.density();
  const auto layout = SubsystemLayout::qubits(3);
  const Matrix full = kron(in.matrix(), bell_state(0).matrix());
  const std::array<std::size_t, 2> alice{0, 1};
  const std::array<std::size_t, 1> keep_bob{2};

  const std::array<const char*, 4> labels{"Phi+", "Phi-", "Psi+", "Psi-"};
  const std::array<const char*, 4> names{"I", "Z", "X", "ZX"};
  const std::array<Matrix, 4> corrections{Matrix::identity(2), pauli::z(), pauli::x(),
                                          pauli::z() * pauli::x()};

  std::vector<Branch> branches;
  for (int k = 0; k < 4; ++k) {
    const Matrix proj = expand_operator(bell_state(k).matrix(), alice, layout);
    const Matrix post = conjugate(proj, full);
    const double p = post.trace().real();
    if (p < kNullBranch) continue;
    const Matrix bob_raw = kernels::partial_trace(post, layout.dims(), keep_bob);
    const Matrix corrected = conjugate(corrections[k], bob_raw);
    branches.push_back({labels[k], p, names[k], normalized_state(corrected, p, SubsystemLayout({2}))});
  }

  DensityMatrix avg(weighted_sum(branches));
  const double f = fidelity(in, avg);
  return {in, "bell(Phi+)", std::move(branches), std::move(avg), f, 2};
}

}  // namespace qtele

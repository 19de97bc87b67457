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


#include <cmath>

#include "doctest.h"
#include "qtele/errors.hpp"
#include "qtele/protocols.hpp"
#include "support.hpp"

using namespace qtele;
using qtele::testing::Rng;

namespace {

// Measure-and-prepare in basis b: rho -> sum_i P_i rho P_i.
Matrix dephase(const Matrix& rho, const QubitBasis& b) {
  return conjugate(b.projector(0), rho) + conjugate(b.projector(1), rho);
}

// Dephasing applied to factor `factor` of a two-qubit state.
Matrix dephase_factor(const Matrix& rho, std::size_t factor, const QubitBasis& b) {
  Matrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    const Matrix p = factor == 0 ? kron(b.projector(i), Matrix::identity(2)) : kron(Matrix::identity(2), b.projector(i));
    out += conjugate(p, rho);
  }
  return out;
}

}  // namespace

TEST_CASE("commuting inputs teleport exactly on every branch") {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const QubitBasis b = qtele::testing::random_basis(rng);
    const DensityMatrix in = commuting_family(qtele::testing::uniform(rng), b);
    const auto tr = teleport_commuting(in, b);
    CHECK(tr.fidelity_to_input == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tr.classical_bits == 1);
    REQUIRE(tr.branches.size() == 2);
    for (const auto& br : tr.branches) {
      CHECK(br.probability == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(max_abs_diff(br.bob_state.matrix(), in.matrix()) < 1e-12);
    }
    CHECK(tr.branches[0].correction == "I");
    CHECK(tr.branches[1].correction == "X");
  }
}

TEST_CASE("noncommuting inputs come out dephased") {
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    const QubitBasis b = qtele::testing::random_basis(rng);
    const DensityMatrix in = qtele::testing::random_density(rng, SubsystemLayout({2}));
    const auto tr = teleport_commuting(in, b);
    CHECK(max_abs_diff(tr.averaged_output.matrix(), dephase(in.matrix(), b)) < 1e-12);
  }
  const auto plus = teleport_commuting(kets::plus().density(), QubitBasis::computational());
  CHECK(plus.fidelity_to_input == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(max_abs_diff(plus.averaged_output.matrix(), 0.5 * Matrix::identity(2)) < 1e-12);
  CHECK_THROWS_AS(teleport_commuting(bell_state(0), QubitBasis::computational()), InputError);
}

TEST_CASE("teleporting one side of a joint state dephases that side") {
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    const QubitBasis b = qtele::testing::random_basis(rng);
    const DensityMatrix rho = qtele::testing::random_density(rng, SubsystemLayout::qubits(2));
    for (std::size_t f = 0; f < 2; ++f) {
      const DensityMatrix out = teleport_subsystem(rho, f, b);
      CHECK(out.layout() == rho.layout());
      CHECK(max_abs_diff(out.matrix(), dephase_factor(rho.matrix(), f, b)) < 1e-12);
    }
  }
  Matrix expect(4, 4);
  expect(0, 0) = 0.5;
  expect(3, 3) = 0.5;
  const DensityMatrix bell_out = teleport_subsystem(bell_state(0), 1, QubitBasis::computational());
  CHECK(max_abs_diff(bell_out.matrix(), expect) < 1e-12);
}

TEST_CASE("teleport_subsystem on a three-party state keeps the factor order") {
  Rng rng(44);
  const SubsystemLayout layout({2, 3, 2});
  const DensityMatrix a = qtele::testing::random_density(rng, SubsystemLayout({2}));
  const DensityMatrix m = qtele::testing::random_density(rng, SubsystemLayout({3}));
  const DensityMatrix c = commuting_family(0.8, QubitBasis::computational());
  const DensityMatrix joint(kron(kron(a.matrix(), m.matrix()), c.matrix()), layout);
  const DensityMatrix out = teleport_subsystem(joint, 2, QubitBasis::computational());
  CHECK(max_abs_diff(out.matrix(), joint.matrix()) < 1e-12);
  CHECK_THROWS_AS(teleport_subsystem(joint, 1, QubitBasis::computational()), InputError);
  CHECK_THROWS_AS(teleport_subsystem(joint, 3, QubitBasis::computational()), InputError);
}

TEST_CASE("broadcast produces classically correlated copies") {
  Rng rng(45);
  for (std::size_t n = 2; n <= 5; ++n) {
    const QubitBasis b = qtele::testing::random_basis(rng);
    const double w = qtele::testing::uniform(rng);
    const DensityMatrix in = commuting_family(w, b);
    const DensityMatrix out = broadcast(in, n, b);
    CHECK(out.layout() == SubsystemLayout::qubits(n));
    // Oracle: w P[b0]^{(x)n} + (1 - w) P[b1]^{(x)n}.
    Matrix p0 = b.projector(0), p1 = b.projector(1);
    for (std::size_t k = 1; k < n; ++k) {
      p0 = kron(p0, b.projector(0));
      p1 = kron(p1, b.projector(1));
    }
    CHECK(max_abs_diff(out.matrix(), w * p0 + (1.0 - w) * p1) < 1e-12);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(max_abs_diff(partial_trace(out, {k}).matrix(), in.matrix()) < 1e-12);
  }
  CHECK_THROWS_AS(broadcast(commuting_family(0.3, QubitBasis::computational()), 1, QubitBasis::computational()),
                  InputError);
  CHECK_THROWS_AS(broadcast(kets::plus().density(), 3, QubitBasis::computational()), NonCommutingInputError);
}

TEST_CASE("standard teleportation over a Bell pair is exact for any pure input") {
  Rng rng(46);
  for (int t = 0; t < 20; ++t) {
    const PureState v = qtele::testing::random_pure(rng, 2);
    const auto tr = standard_teleport(v);
    CHECK(tr.fidelity_to_input == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tr.classical_bits == 2);
    REQUIRE(tr.branches.size() == 4);
    for (const auto& br : tr.branches) {
      CHECK(br.probability == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(max_abs_diff(br.bob_state.matrix(), v.density().matrix()) < 1e-12);
    }
  }
}

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
#include <vector>

#include "doctest.h"
#include "qtele/analysis.hpp"
#include "qtele/errors.hpp"
#include "qtele/protocols.hpp"
#include "support.hpp"

using namespace qtele;
using qtele::testing::Rng;

namespace {

// cos(a)|00> + sin(a)|11>: partial-transpose eigenvalues are cos^2, sin^2,
// and +-sin(a)cos(a), so the negativity is |sin 2a| / 2.
DensityMatrix schmidt_state(double a) {
  return PureState({std::cos(a), 0.0, 0.0, std::sin(a)}).density(SubsystemLayout::qubits(2));
}

}  // namespace

TEST_CASE("commutation test") {
  const DensityMatrix z = commuting_family(0.3, QubitBasis::computational());
  const DensityMatrix z2 = commuting_family(0.9, QubitBasis::computational());
  CHECK(commutes(z, z2).commute);
  CHECK(commutes(z, z2).norm == 0.0);
  const auto c = commutes(kets::plus().density(), kets::zero().density());
  CHECK_FALSE(c.commute);
  // [|+><+|, |0><0|] = [[0, -1/2], [1/2, 0]].
  CHECK(c.norm == doctest::Approx(std::sqrt(2.0) / 2.0));
}

TEST_CASE("common eigenbasis") {
  const std::vector<DensityMatrix> diag{commuting_family(0.2, QubitBasis::computational()),
                                        commuting_family(0.7, QubitBasis::computational())};
  const QubitBasis b = common_eigenbasis(diag);
  CHECK(max_abs_diff(b.projector(0), QubitBasis::computational().projector(0)) < 1e-15);

  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    const QubitBasis r = qtele::testing::random_basis(rng);
    const DensityMatrix a = commuting_family(qtele::testing::uniform(rng), r);
    const DensityMatrix c = commuting_family(qtele::testing::uniform(rng), r);
    const QubitBasis found = common_eigenbasis(a, c);
    for (const auto* rho : {&a, &c}) {
      const Complex off = inner(found.b0().amplitudes(), matvec(rho->matrix(), found.b1().amplitudes()));
      CHECK(std::abs(off) < 1e-12);
    }
  }
  // Maximally mixed states commute with everything; the computational basis is returned.
  const std::vector<DensityMatrix> mixed{DensityMatrix(0.5 * Matrix::identity(2))};
  CHECK(max_abs_diff(common_eigenbasis(mixed).projector(0), QubitBasis::computational().projector(0)) == 0.0);
  const std::vector<DensityMatrix> clash{kets::plus().density(), kets::zero().density()};
  CHECK_THROWS_AS(common_eigenbasis(clash), NonCommutingError);
}

TEST_CASE("decomposition golden value") {
  const auto d = noncommuting_decomposition(qubit_from_bloch({0.5, 0.0, 0.0}), qubit_from_bloch({0.0, 0.0, 0.5}));
  const double s7 = std::sqrt(7.0);
  CHECK(std::abs(d.lambda1 - (1.0 + s7) / (2.0 * s7)) < 1e-12);
  CHECK(std::abs(d.lambda2 - (s7 - 1.0) / (2.0 * s7)) < 1e-12);
  CHECK(std::abs(d.t_minus - (1.0 - s7) / 2.0) < 1e-12);
  CHECK(std::abs(d.t_plus - (1.0 + s7) / 2.0) < 1e-12);
  CHECK(d.reconstruction_error <= 1e-12);
  // |<psi|phi>|^2 = (1 + n_psi . n_phi) / 2 for unit Bloch vectors.
  const BlochVector np{0.5 - 0.5 * d.t_minus, 0.0, 0.5 * d.t_minus};
  const BlochVector nf{0.5 - 0.5 * d.t_plus, 0.0, 0.5 * d.t_plus};
  CHECK(d.overlap == doctest::Approx(std::sqrt((1.0 + np.dot(nf)) / 2.0)).epsilon(1e-12));
  CHECK(d.overlap > 0.0);
  CHECK_FALSE(d.ill_conditioned);
}

TEST_CASE("decomposition of random noncommuting pairs reconstructs both states") {
  Rng rng(52);
  for (int t = 0; t < 200; ++t) {
    const DensityMatrix a = qtele::testing::random_density(rng, SubsystemLayout({2}));
    const DensityMatrix b = qtele::testing::random_density(rng, SubsystemLayout({2}));
    const auto d = noncommuting_decomposition(a, b);
    CHECK(d.reconstruction_error <= 1e-10);
    CHECK(d.lambda1 >= 0.0);
    CHECK(d.lambda1 <= 1.0);
    CHECK(d.lambda2 >= 0.0);
    CHECK(d.lambda2 <= 1.0);
    CHECK(d.overlap > 0.0);
    CHECK(d.psi_bloch.length() == doctest::Approx(1.0).epsilon(1e-12));
  }
  const DensityMatrix same = commuting_family(0.4, QubitBasis::computational());
  CHECK_THROWS_AS(noncommuting_decomposition(same, same), CommutingError);
}

TEST_CASE("partial transpose and negativity") {
  Rng rng(53);
  const DensityMatrix rho = qtele::testing::random_density(rng, SubsystemLayout::qubits(2));
  for (std::size_t s = 0; s < 2; ++s) {
    const Matrix pt = partial_transpose(rho, s);
    const DensityMatrix back(partial_transpose(pt, 2, 2, s), rho.layout());
    CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);
  }
  // Transposing A equals transposing B, then the whole matrix.
  CHECK(max_abs_diff(partial_transpose(rho, 0), partial_transpose(rho, 1).transpose()) == 0.0);

  for (double a : {0.0, 0.1, 0.4, M_PI / 4.0, 1.2}) {
    const auto r = ppt_report(schmidt_state(a));
    CHECK(r.negativity == doctest::Approx(std::abs(std::sin(2.0 * a)) / 2.0).epsilon(1e-12));
    CHECK(r.separable == (std::abs(std::sin(2.0 * a)) < 1e-10));
  }
  const auto bell = ppt_report(bell_state(0));
  CHECK(bell.min_eigenvalue == doctest::Approx(-0.5));
  CHECK(bell.negativity == doctest::Approx(0.5));
  CHECK_FALSE(bell.separable);
  CHECK(ppt_report(classical_channel(QubitBasis::hadamard()).state).separable);
}

TEST_CASE("Werner states are entangled exactly above p = 1/3") {
  for (double p : {0.0, 0.2, 0.33, 0.34, 0.5, 1.0}) {
    const DensityMatrix w(p * bell_state(3).matrix() + (1.0 - p) * 0.25 * Matrix::identity(4),
                          SubsystemLayout::qubits(2));
    const auto r = ppt_report(w);
    CHECK(r.separable == (p <= 1.0 / 3.0));
    CHECK(r.negativity == doctest::Approx(std::max(0.0, (3.0 * p - 1.0) / 4.0)).epsilon(1e-12));
  }
}

TEST_CASE("negativity of the entangled member of F") {
  for (double c : {0.1, 0.5, 1.0 / std::sqrt(2.0), 0.9}) {
    const PureState beta = PureState::normalized({c, std::sqrt(1.0 - c * c)});
    const auto f = family_F(kets::zero(), beta);
    CHECK(negativity(f[2].density().matrix(), 2, 2) == doctest::Approx(std::sqrt(1.0 - c * c) / 2.0).epsilon(1e-12));
    CHECK(negativity(f[0].density().matrix(), 2, 2) < 1e-15);
  }
}

TEST_CASE("disentangling by teleportation") {
  const std::vector<DensityMatrix> bell{bell_state(0)};
  const auto out = disentangle_by_teleport(bell, Side::B);
  Matrix expect(4, 4);
  expect(0, 0) = 0.5;
  expect(3, 3) = 0.5;
  CHECK(max_abs_diff(out[0].matrix(), expect) < 1e-12);
  CHECK(ppt_report(out[0]).min_eigenvalue >= -1e-12);

  const std::vector<DensityMatrix> products{
      tensor(kets::zero().density(), kets::one().density()),
      tensor(kets::plus().density(), kets::zero().density())};
  const auto same = disentangle_by_teleport(products, Side::B);
  for (std::size_t i = 0; i < products.size(); ++i)
    CHECK(max_abs_diff(same[i].matrix(), products[i].matrix()) < 1e-12);

  // Side-B marginals |0><0| and |+><+| do not commute.
  const std::vector<DensityMatrix> s{
      PureState({std::cos(M_PI / 8), 0.0, 0.0, std::sin(M_PI / 8)}).density(SubsystemLayout::qubits(2)),
      tensor(kets::zero().density(), kets::plus().density())};
  CHECK_THROWS_AS(disentangle_by_teleport(s, Side::B), NonCommutingMarginalsError);
  // Side A marginals commute (both diagonal), so that direction works.
  for (const auto& rho : disentangle_by_teleport(s, Side::A)) CHECK(ppt_report(rho).separable);
}

TEST_CASE("teleporting a side never creates entanglement") {
  Rng rng(54);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = qtele::testing::random_density(rng, SubsystemLayout::qubits(2));
    const QubitBasis b = qtele::testing::random_basis(rng);
    const DensityMatrix out = teleport_subsystem(rho, t % 2, b);
    CHECK(ppt_report(out).negativity <= ppt_report(rho).negativity + 1e-10);
    CHECK(ppt_report(out).separable);
  }
}

TEST_CASE("unitarity forces equal ancillas") {
  Rng rng(55);
  const PureState psi = qtele::testing::random_pure(rng, 2), phi = qtele::testing::random_pure(rng, 2);
  const PureState m = qtele::testing::random_pure(rng, 3);
  CHECK(unitarity_forces_equal_ancillas(psi, phi, m, m).consistent);
  const PureState m2 = qtele::testing::random_pure(rng, 3);
  const auto r = unitarity_forces_equal_ancillas(psi, phi, m, m2);
  CHECK_FALSE(r.consistent);
  const double expect =
      std::abs(inner(psi.amplitudes(), phi.amplitudes())) * std::abs(1.0 - inner(m.amplitudes(), m2.amplitudes()));
  CHECK(r.violation == doctest::Approx(expect).epsilon(1e-14));
  // A global phase on M1 also breaks the condition: <M0|M1> must equal 1, not just have modulus 1.
  Vector shifted = m.amplitudes();
  for (auto& z : shifted) z *= std::polar(1.0, 0.3);
  CHECK_FALSE(unitarity_forces_equal_ancillas(psi, phi, m, PureState(shifted)).consistent);
  CHECK_THROWS_AS(unitarity_forces_equal_ancillas(kets::zero(), kets::one(), m, m), InputError);
}

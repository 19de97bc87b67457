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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qtele/analysis.hpp"
#include "qtele/cli/commands.hpp"
#include "qtele/cli/state_io.hpp"
#include "qtele/protocols.hpp"
#include "qtele/search.hpp"
#include "support.hpp"

using namespace qtele;
using qtele::testing::Rng;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome teleport_exactness() {
  Rng rng(1001);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const QubitBasis b = qtele::testing::random_basis(rng);
    const DensityMatrix in = commuting_family(qtele::testing::uniform(rng), b);
    const auto t = teleport_commuting(in, b);
    worst = std::max(worst, std::abs(1.0 - t.fidelity_to_input));
    for (const auto& br : t.branches) worst = std::max(worst, max_abs_diff(br.bob_state.matrix(), in.matrix()));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-12 && secs < 1.0, fmt("200 cases, worst error %.3g, %.3f s", worst, secs)};
}

Outcome noncommuting_failure() {
  const auto t = teleport_commuting(kets::plus().density(), QubitBasis::computational());
  const double f_err = std::abs(t.fidelity_to_input - 0.5);
  const double out_err = max_abs_diff(t.averaged_output.matrix(), 0.5 * Matrix::identity(2));
  return {f_err <= 1e-12 && out_err <= 1e-12,
          fmt("fidelity %.17g, output distance from I/2 %.3g", t.fidelity_to_input, out_err)};
}

Outcome broadcast_copies() {
  Rng rng(1003);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (int i = 0; i < 20; ++i) {
      const QubitBasis b = qtele::testing::random_basis(rng);
      const DensityMatrix in = commuting_family(qtele::testing::uniform(rng), b);
      const DensityMatrix out = broadcast(in, n, b);
      for (std::size_t k = 0; k < n; ++k)
        worst = std::max(worst, max_abs_diff(partial_trace(out, {k}).matrix(), in.matrix()));
    }
  const double secs = seconds_since(t0);
  return {worst <= 1e-12 && secs < 5.0, fmt("n = 2..6 x 20 inputs, worst marginal error %.3g, %.3f s", worst, secs)};
}

Outcome decomposition() {
  const auto d = noncommuting_decomposition(qubit_from_bloch({0.5, 0.0, 0.0}), qubit_from_bloch({0.0, 0.0, 0.5}));
  const double s7 = std::sqrt(7.0);
  const double e1 = std::abs(d.lambda1 - (1.0 + s7) / (2.0 * s7));
  const double e2 = std::abs(d.lambda2 - (s7 - 1.0) / (2.0 * s7));
  bool ok = e1 <= 1e-9 && e2 <= 1e-9 && d.reconstruction_error <= 1e-10 && d.overlap > 0.0;

  Rng rng(1004);
  double worst_rec = 0.0, min_overlap = 1.0;
  int tried = 0;
  while (tried < 500) {
    const DensityMatrix a = qtele::testing::random_density(rng, SubsystemLayout({2}));
    const DensityMatrix b = qtele::testing::random_density(rng, SubsystemLayout({2}));
    if (commutes(a, b).commute) continue;
    ++tried;
    const auto r = noncommuting_decomposition(a, b);
    worst_rec = std::max(worst_rec, r.reconstruction_error);
    min_overlap = std::min(min_overlap, r.overlap);
    ok = ok && r.lambda1 >= 0.0 && r.lambda1 <= 1.0 && r.lambda2 >= 0.0 && r.lambda2 <= 1.0 && r.overlap > 0.0;
  }
  ok = ok && worst_rec <= 1e-10;
  return {ok, fmt("lambda1 %.12f, lambda2 %.12f; 500 random pairs, worst reconstruction %.3g, min overlap %.3g",
                  d.lambda1, d.lambda2, worst_rec, min_overlap)};
}

Outcome disentangle_bell() {
  const std::vector<DensityMatrix> set{bell_state(0)};
  const DensityMatrix out = disentangle_by_teleport(set, Side::B)[0];
  Matrix expect(4, 4);
  expect(0, 0) = 0.5;
  expect(3, 3) = 0.5;
  const double err = max_abs_diff(out.matrix(), expect);
  const double min_eig = ppt_report(out).min_eigenvalue;
  const double marg = std::max(max_abs_diff(partial_trace(out, {0}).matrix(), partial_trace(set[0], {0}).matrix()),
                               max_abs_diff(partial_trace(out, {1}).matrix(), partial_trace(set[0], {1}).matrix()));
  return {err <= 1e-12 && min_eig >= -1e-12 && marg <= 1e-12,
          fmt("output error %.3g, min PT eigenvalue %.3g, marginal error %.3g", err, min_eig, marg)};
}

Outcome no_entanglement_creation() {
  Rng rng(1006);
  double worst_gain = -1.0;
  bool separable_kept = true;
  int separable_inputs = 0;
  for (int i = 0; i < 100; ++i) {
    DensityMatrix in = qtele::testing::random_density(rng, SubsystemLayout::qubits(2));
    // Every other input is a random separable mixture of products.
    if (i % 2 == 1) {
      Matrix mix(4, 4);
      double total = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double w = qtele::testing::uniform(rng);
        total += w;
        mix += w * kron(qtele::testing::random_density(rng, SubsystemLayout({2})).matrix(),
                        qtele::testing::random_density(rng, SubsystemLayout({2})).matrix());
      }
      mix *= 1.0 / total;
      in = DensityMatrix(mix.hermitian_part(), SubsystemLayout::qubits(2));
    }
    const QubitBasis b = qtele::testing::random_basis(rng);
    const DensityMatrix out = teleport_subsystem(in, i % 4 < 2 ? 1 : 0, b);
    const auto before = ppt_report(in), after = ppt_report(out);
    worst_gain = std::max(worst_gain, after.negativity - before.negativity);
    if (before.separable) {
      ++separable_inputs;
      separable_kept = separable_kept && after.separable;
    }
  }
  return {worst_gain <= 1e-10 && separable_kept,
          fmt("100 inputs (%d separable), largest negativity change %.3g", separable_inputs, worst_gain)};
}

Outcome unitarity_check() {
  Rng rng(1007);
  int agree = 0, consistent_cases = 0;
  for (int i = 0; i < 100; ++i) {
    PureState psi = qtele::testing::random_pure(rng, 2), phi = qtele::testing::random_pure(rng, 2);
    const std::size_t dm = 2 + i % 3;
    const PureState m0 = qtele::testing::random_pure(rng, dm);
    PureState m1 = qtele::testing::random_pure(rng, dm);
    if (i % 3 == 0) m1 = m0;
    if (i % 3 == 1) {
      Vector v = m0.amplitudes();
      for (auto& z : v) z *= std::polar(1.0, 1e-3 * (i + 1));
      m1 = PureState(v);
    }
    const auto r = unitarity_forces_equal_ancillas(psi, phi, m0, m1);
    const bool expect = std::abs(1.0 - inner(m0.amplitudes(), m1.amplitudes())) <= 1e-12;
    consistent_cases += expect;
    agree += r.consistent == expect;
  }
  return {agree == 100, fmt("%d/100 verdicts agree (%d consistent cases)", agree, consistent_cases)};
}

Outcome search_evidence() {
  const auto t0 = Clock::now();
  const double c = 1.0 / std::sqrt(2.0);
  const double expected_initial = std::sqrt(1.0 - c * c) / 2.0;
  // One ancilla qubit already admits the swap construction.
  SearchProblem p = set_f_problem(c, 2);
  const SearchResult r = minimize(p, 20, 7);
  const double threshold = 0.9 * expected_initial;
  int feasible = 0;
  double min_feasible_neg = 1e300;
  for (const auto& pt : r.points)
    if (pt.max_deviation <= 1e-6) {
      ++feasible;
      min_feasible_neg = std::min(min_feasible_neg, pt.negativity_sum);
    }

  SearchProblem free = p;
  free.penalty_weights = {0.0};
  const SearchResult u = minimize(free, 3, 7);
  double min_free = 1e300;
  for (const auto& pt : u.points) min_free = std::min(min_free, pt.negativity_sum);

  const double secs = seconds_since(t0);
  const bool ok = std::abs(r.initial_negativity - expected_initial) <= 1e-12 && feasible > 0 &&
                  min_feasible_neg >= threshold && min_free <= 1e-6 && secs <= 600.0;
  return {ok, fmt("initial %.6f; %d/%zu points feasible, lowest feasible negativity %.6f (threshold %.6f); "
                  "mu = 0 reaches %.3g; %.1f s",
                  r.initial_negativity, feasible, r.points.size(), min_feasible_neg, threshold, min_free, secs)};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("qtele_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string path = (dir / "report.json").string();
  const std::vector<std::vector<std::string>> runs{
      {"search", "--problem", "setF", "--ancilla-dim", "2", "--restarts", "3", "--seed", "7", "--max-iterations", "10"},
      {"search", "--problem", "lemma", "--ancilla-dim", "2", "--restarts", "2", "--seed", "3", "--max-iterations", "10"},
      {"teleport", "--w", "0.3", "--basis", "x"},
      {"teleport", "--state", "plus", "--basis", "z"},
      {"broadcast", "--w", "0.7", "--n", "5"},
      {"decompose", "--state1", "plus", "--state2", "zero"},
      {"disentangle", "--set", "bell0", "bell3", "--side", "B"},
      {"check", "--ppt", "setF:0.70710678:2"}};
  int identical = 0;
  for (auto args : runs) {
    args.insert(args.end(), {"--out", path, "--force"});
    std::ostringstream sink;
    cli::run_cli(args, sink, sink);
    const std::string first = cli::read_file(path);
    cli::run_cli(args, sink, sink);
    identical += first == cli::read_file(path);
  }
  fs::remove_all(dir);
  return {identical == static_cast<int>(runs.size()),
          fmt("%d/%zu report files bit-identical on rerun", identical, runs.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"commuting teleportation is exact", teleport_exactness},
      {"noncommuting input is dephased", noncommuting_failure},
      {"broadcast preserves every marginal", broadcast_copies},
      {"decomposition golden value and random pairs", decomposition},
      {"disentangling a Bell pair by teleportation", disentangle_bell},
      {"teleporting one side creates no entanglement", no_entanglement_creation},
      {"unitarity forces equal ancillas", unitarity_check},
      {"set F search evidence", search_evidence},
      {"determinism of report files", determinism}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

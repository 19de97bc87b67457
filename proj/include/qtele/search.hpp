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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtele/density.hpp"

namespace qtele {

enum class ProblemKind { SetF, Lemma };

std::string to_string(ProblemKind kind);

/// Coefficients of H = sum_k theta_k G_k over the fixed Hermitian basis of
/// dimension `dim` (see hermitian_generator for the ordering).
struct UnitaryParams {
  std::size_t dim = 0;
  std::vector<double> theta;  // length dim^2
};

enum class Execution { parallel, serial };

/// bfgs: dense quasi-Newton with a weak Wolfe bisection line search.
/// gradient: steepest descent with Armijo backtracking.
enum class Optimizer { bfgs, gradient };

/// Search for an ancilla-assisted unitary that disentangles a set of
/// two-qubit states while keeping both marginals of every member.
///   SetF:  U acts on A (x) B (x) ancilla.
///   Lemma: U acts on B (x) ancilla only; A is untouched.
struct SearchProblem {
  ProblemKind kind = ProblemKind::SetF;
  std::vector<DensityMatrix> states;  // each on [2, 2]
  std::size_t ancilla_dim = 4;
  PureState ancilla_init = PureState({1.0, 0.0, 0.0, 0.0});
  std::vector<double> penalty_weights{1.0, 10.0, 100.0, 1000.0};

  int max_iterations = 200;       // descent steps per penalty weight
  double feasibility_tol = 1e-6;  // on the largest marginal trace distance
  double fd_step = 1e-8;          // central differences; must stay below feasibility_tol
  double init_scale = 0.5;        // theta_k ~ U(-scale, scale) per restart
  Optimizer optimizer = Optimizer::bfgs;
  Execution execution = Execution::parallel;

  /// Dimension the unitary acts on.
  std::size_t unitary_dim() const;
  std::size_t parameter_count() const { return unitary_dim() * unitary_dim(); }
};

/// Set F = {|0 alpha>, |1 beta>, (|0 alpha> + |1 beta>)/sqrt 2} with
/// alpha = |0>, beta = c|0> + sqrt(1 - c^2)|1>, ancilla |0...0>.
SearchProblem set_f_problem(double overlap, std::size_t ancilla_dim = 4);

/// Two states with noncommuting B marginals, one entangled:
/// cos(pi/8)|00> + sin(pi/8)|11> and |0>|+>.
SearchProblem lemma_problem(std::size_t ancilla_dim = 4);

/// Basis element k for dimension d: k < d gives E_kk; the rest walk pairs
/// (j < l) lexicographically, each contributing (E_jl + E_lj)/2 then
/// (-i E_jl + i E_lj)/2.
Matrix hermitian_generator(std::size_t k, std::size_t d);
Matrix generator_sum(const UnitaryParams& params);

/// U = exp(i H(theta)). Throws InputError if theta.size() != dim^2.
Matrix build_unitary(const UnitaryParams& params);

struct ObjectiveValue {
  double total = 0.0;
  double negativity_sum = 0.0;
  double deviation_sum = 0.0;   // over states and both parties
  double max_deviation = 0.0;   // largest single marginal trace distance
  std::vector<double> negativities;
};

ObjectiveValue objective(const UnitaryParams& params, const SearchProblem& problem, double mu);
/// Same, for an explicit unitary on problem.unitary_dim().
ObjectiveValue objective_for_unitary(const Matrix& u, const SearchProblem& problem, double mu);

/// Central-difference gradient. Components are independent evaluations, so
/// the parallel and serial versions return identical bits.
std::vector<double> fd_gradient(const std::function<double(std::span<const double>)>& f,
                                std::span<const double> x, double step);
std::vector<double> fd_gradient_serial(const std::function<double(std::span<const double>)>& f,
                                       std::span<const double> x, double step);

struct SearchPoint {
  std::size_t restart = 0;
  double mu = 0.0;
  double objective = 0.0;
  double negativity_sum = 0.0;
  double deviation_sum = 0.0;
  double max_deviation = 0.0;
  int iterations = 0;
};

struct TradeOffPoint {
  double mu = 0.0;
  double deviation = 0.0;
  double negativity = 0.0;
};

struct SearchResult {
  UnitaryParams best_theta;
  std::vector<double> negativity_terms;
  double marginal_deviation = 0.0;
  double objective = 0.0;
  double mu = 0.0;
  std::uint64_t seed = 0;
  std::size_t restart = 0;
  int iterations = 0;
  double initial_negativity = 0.0;  // theta = 0 anchor

  std::vector<TradeOffPoint> trade_off_curve;  // deviation non-increasing in mu
  std::vector<TradeOffPoint> raw_curve;        // before monotone reordering
  std::vector<SearchPoint> points;             // every restart at every mu
  std::optional<SearchPoint> best_feasible;    // lowest negativity among feasible points
};

/// Penalized search: each restart draws theta from its own generator seeded
/// by (seed, restart) and descends through the penalty weights in ascending
/// order, warm-starting each weight from the previous optimum. Deterministic
/// in (problem, restarts, seed).
SearchResult minimize(const SearchProblem& problem, int restarts, std::uint64_t seed);

}  // namespace qtele

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

#include "qtele/search.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qtele/analysis.hpp"
#include "qtele/errors.hpp"
#include "qtele/linalg.hpp"
#include "qtele/states.hpp"

namespace qtele {

std::string to_string(ProblemKind kind) { return kind == ProblemKind::SetF ? "setF" : "lemma"; }

std::size_t SearchProblem::unitary_dim() const {
  return (kind == ProblemKind::SetF ? 4 : 2) * ancilla_dim;
}

namespace {

PureState ancilla_ground(std::size_t dim) {
  if (dim < 2) throw InputError("search: ancilla dimension must be at least 2");
  Vector v(dim, 0.0);
  v[0] = 1.0;
  return PureState(std::move(v));
}

// Pair index (j, l), j < l, of off-diagonal generator slot `slot`.
std::pair<std::size_t, std::size_t> pair_of(std::size_t slot, std::size_t d) {
  std::size_t j = 0;
  while (slot >= d - 1 - j) {
    slot -= d - 1 - j;
    ++j;
  }
  return {j, j + 1 + slot};
}

struct GeneratorShape {
  std::size_t j, l;
  enum { diagonal, symmetric, antisymmetric } type;
};

GeneratorShape shape_of(std::size_t k, std::size_t d) {
  if (k < d) return {k, k, GeneratorShape::diagonal};
  const std::size_t off = k - d;
  const auto [j, l] = pair_of(off / 2, d);
  return {j, l, off % 2 == 0 ? GeneratorShape::symmetric : GeneratorShape::antisymmetric};
}

void check_params(const UnitaryParams& p) {
  if (p.dim == 0 || p.theta.size() != p.dim * p.dim)
    throw InputError("UnitaryParams: theta length must equal dim^2");
  for (double t : p.theta)
    if (!std::isfinite(t)) throw InputError("UnitaryParams: non-finite entry");
}

Matrix hamiltonian(std::span<const double> theta, std::size_t d) {
  Matrix h(d, d);
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const auto g = shape_of(k, d);
    switch (g.type) {
      case GeneratorShape::diagonal: h(g.j, g.j) += theta[k]; break;
      case GeneratorShape::symmetric:
        h(g.j, g.l) += 0.5 * theta[k];
        h(g.l, g.j) += 0.5 * theta[k];
        break;
      case GeneratorShape::antisymmetric:
        h(g.j, g.l) += Complex(0.0, -0.5 * theta[k]);
        h(g.l, g.j) += Complex(0.0, 0.5 * theta[k]);
        break;
    }
  }
  return h;
}

// V^dagger G_k V without forming G_k.
Matrix rotated_generator(std::size_t k, const Matrix& v) {
  const std::size_t d = v.rows();
  const auto g = shape_of(k, d);
  Matrix out(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    const Complex vj_a = std::conj(v(g.j, a));
    const Complex vl_a = std::conj(v(g.l, a));
    for (std::size_t b = 0; b < d; ++b) {
      switch (g.type) {
        case GeneratorShape::diagonal: out(a, b) = vj_a * v(g.j, b); break;
        case GeneratorShape::symmetric:
          out(a, b) = 0.5 * (vj_a * v(g.l, b) + vl_a * v(g.j, b));
          break;
        case GeneratorShape::antisymmetric:
          out(a, b) = Complex(0.0, 0.5) * (vl_a * v(g.j, b) - vj_a * v(g.l, b));
          break;
      }
    }
  }
  return out;
}

Vector adjoint_apply(const Matrix& m, std::span<const Complex> v) {
  Vector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += std::conj(m(i, j)) * v[i];
    out[j] = acc;
  }
  return out;
}

// Evaluates the penalized objective for a problem. Input states are split
// into weighted pure components once, so each evaluation only pushes a few
// vectors through the unitary.
class Evaluator {
 public:
  explicit Evaluator(const SearchProblem& p) : problem_(p), ud_(p.unitary_dim()), anc_(p.ancilla_dim) {
    if (p.states.empty()) throw InputError("search: problem has no states");
    if (p.ancilla_init.dim() != anc_) throw InputError("search: ancilla state dimension mismatch");
    const std::size_t full = 4 * anc_;
    blocks_ = full / ud_;
    for (std::size_t s = 0; s < p.states.size(); ++s) {
      const auto& rho = p.states[s];
      if (rho.layout() != SubsystemLayout::qubits(2)) throw InputError("search: states must be on [2, 2]");
      margin_a_.push_back(partial_trace(rho, {0}).matrix());
      margin_b_.push_back(partial_trace(rho, {1}).matrix());
      const auto dec = eig_hermitian(rho.matrix());
      for (std::size_t c = 0; c < 4; ++c) {
        if (dec.values[c] < 1e-14) continue;
        Vector v(4);
        for (std::size_t i = 0; i < 4; ++i) v[i] = dec.vectors(i, c);
        comps_.push_back({dec.values[c], s, kron(std::span<const Complex>(v),
                                                 std::span(p.ancilla_init.amplitudes()))});
      }
    }
  }

  std::size_t unitary_dim() const { return ud_; }

  ObjectiveValue with_unitary(const Matrix& u, double mu) const {
    if (u.rows() != ud_ || u.cols() != ud_) throw InputError("objective: unitary has the wrong dimension");
    std::vector<Vector> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) {
      Vector w(c.vec.size());
      for (std::size_t b = 0; b < blocks_; ++b) {
        const auto y = matvec(u, std::span(c.vec).subspan(b * ud_, ud_));
        std::copy(y.begin(), y.end(), w.begin() + b * ud_);
      }
      out.push_back(std::move(w));
    }
    return finish(out, mu);
  }

  // Unitary given spectrally as basis * diag(exp(i lambda)) * basis^dagger,
  // with basis^dagger applied to every component block already (`pre`).
  ObjectiveValue with_spectral(const Matrix& basis, std::span<const double> lambda,
                               const std::vector<Vector>& pre, double mu) const {
    std::vector<Vector> out;
    out.reserve(comps_.size());
    for (const auto& y_all : pre) {
      Vector w(y_all.size());
      for (std::size_t b = 0; b < blocks_; ++b) {
        Vector y(y_all.begin() + b * ud_, y_all.begin() + (b + 1) * ud_);
        for (std::size_t i = 0; i < ud_; ++i) y[i] *= std::polar(1.0, lambda[i]);
        const auto z = matvec(basis, y);
        std::copy(z.begin(), z.end(), w.begin() + b * ud_);
      }
      out.push_back(std::move(w));
    }
    return finish(out, mu);
  }

  std::vector<Vector> project(const Matrix& basis) const {
    std::vector<Vector> pre;
    pre.reserve(comps_.size());
    for (const auto& c : comps_) {
      Vector y(c.vec.size());
      for (std::size_t b = 0; b < blocks_; ++b) {
        const auto z = adjoint_apply(basis, std::span(c.vec).subspan(b * ud_, ud_));
        std::copy(z.begin(), z.end(), y.begin() + b * ud_);
      }
      pre.push_back(std::move(y));
    }
    return pre;
  }

  ObjectiveValue at_theta(std::span<const double> theta, double mu) const {
    const auto dec = eig_hermitian(hamiltonian(theta, ud_));
    return with_spectral(dec.vectors, dec.values, project(dec.vectors), mu);
  }

  // Central differences along each generator, diagonalizing the perturbed
  // Hamiltonian in the eigenbasis of the unperturbed one.
  std::vector<double> gradient(std::span<const double> theta, double mu, Execution exec) const {
    const auto dec = eig_hermitian(hamiltonian(theta, ud_));
    const auto pre = project(dec.vectors);
    const Matrix diag = Matrix::diagonal(std::span<const double>(dec.values));
    const double h = problem_.fd_step;
    const std::size_t n = theta.size();
    std::vector<double> g(n);

    auto component = [&](std::size_t k) {
      const Matrix rg = rotated_generator(k, dec.vectors);
      double side[2];
      for (int s = 0; s < 2; ++s) {
        const double step = s == 0 ? h : -h;
        const auto inner_dec = eig_hermitian((diag + step * rg).hermitian_part());
        // Components in the rotated frame: W^dagger (V^dagger v).
        std::vector<Vector> pre_w;
        pre_w.reserve(pre.size());
        for (const auto& y : pre) {
          Vector z(y.size());
          for (std::size_t b = 0; b < blocks_; ++b) {
            const auto t = adjoint_apply(inner_dec.vectors, std::span(y).subspan(b * ud_, ud_));
            std::copy(t.begin(), t.end(), z.begin() + b * ud_);
          }
          pre_w.push_back(std::move(z));
        }
        const Matrix basis = dec.vectors * inner_dec.vectors;
        side[s] = with_spectral(basis, inner_dec.values, pre_w, mu).total;
      }
      return (side[0] - side[1]) / (2.0 * h);
    };

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
      for (std::size_t k = 0; k < n; ++k) g[k] = component(k);
    } else {
      for (std::size_t k = 0; k < n; ++k) g[k] = component(k);
    }
    return g;
  }

 private:
  struct Component {
    double weight;
    std::size_t state;
    Vector vec;  // on A (x) B (x) ancilla
  };

  ObjectiveValue finish(const std::vector<Vector>& out, double mu) const {
    const std::size_t n_states = problem_.states.size();
    std::vector<Matrix> reduced(n_states, Matrix(4, 4));
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      const auto& u = out[c];
      Matrix& r = reduced[comps_[c].state];
      const double w = comps_[c].weight;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          Complex acc = 0.0;
          for (std::size_t m = 0; m < anc_; ++m) acc += u[i * anc_ + m] * std::conj(u[j * anc_ + m]);
          r(i, j) += w * acc;
        }
    }

    ObjectiveValue v;
    v.negativities.resize(n_states);
    for (std::size_t s = 0; s < n_states; ++s) {
      const Matrix rho = reduced[s].hermitian_part();
      v.negativities[s] = negativity(rho, 2, 2);
      v.negativity_sum += v.negativities[s];
      Matrix ra(2, 2), rb(2, 2);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t a2 = 0; a2 < 2; ++a2)
          for (std::size_t b = 0; b < 2; ++b) {
            ra(a, a2) += rho(a * 2 + b, a2 * 2 + b);
            rb(a, a2) += rho(b * 2 + a, b * 2 + a2);
          }
      const double da = trace_distance(ra, margin_a_[s]);
      const double db = trace_distance(rb, margin_b_[s]);
      v.deviation_sum += da + db;
      v.max_deviation = std::max({v.max_deviation, da, db});
    }
    v.total = v.negativity_sum + mu * v.deviation_sum;
    return v;
  }

  const SearchProblem& problem_;
  std::size_t ud_;
  std::size_t anc_;
  std::size_t blocks_ = 1;
  std::vector<Component> comps_;
  std::vector<Matrix> margin_a_, margin_b_;
};

struct Descent {
  std::vector<double> theta;
  ObjectiveValue value;
  int iterations = 0;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Dense inverse-Hessian BFGS with a bisection line search for the weak Wolfe
// conditions. The objective has kinks where a marginal deviation vanishes, and
// this combination keeps making progress there where backtracking stalls.
class InverseHessian {
 public:
  explicit InverseHessian(std::size_t n) : n_(n), h_(n * n, 0.0) { reset(); }

  void reset() {
    std::fill(h_.begin(), h_.end(), 0.0);
    for (std::size_t i = 0; i < n_; ++i) h_[i * n_ + i] = 1.0;
    fresh_ = true;
  }

  std::vector<double> direction(const std::vector<double>& g) const {
    std::vector<double> d(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n_; ++j) s += h_[i * n_ + j] * g[j];
      d[i] = -s;
    }
    return d;
  }

  void update(const std::vector<double>& s, const std::vector<double>& y) {
    const double sy = dot(s, y);
    if (!(sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y)))) return;
    if (fresh_) {
      const double gamma = sy / dot(y, y);
      for (auto& v : h_) v *= gamma;
      fresh_ = false;
    }
    // H <- (I - r s y^T) H (I - r y s^T) + r s s^T
    const double r = 1.0 / sy;
    std::vector<double> hy(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n_; ++j) acc += h_[i * n_ + j] * y[j];
      hy[i] = acc;
    }
    const double yhy = dot(y, hy);
    const double c = r * r * yhy + r;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        h_[i * n_ + j] += c * s[i] * s[j] - r * (hy[i] * s[j] + s[i] * hy[j]);
  }

 private:
  std::size_t n_;
  std::vector<double> h_;
  bool fresh_ = true;
};

Descent descend(const Evaluator& ev, const SearchProblem& p, std::vector<double> theta, double mu) {
  constexpr double kArmijo = 1e-4;
  constexpr double kWolfe = 0.9;
  constexpr double kMinStep = 1e-14;
  constexpr int kMaxTrials = 50;
  const bool bfgs = p.optimizer == Optimizer::bfgs;
  ObjectiveValue cur = ev.at_theta(theta, mu);
  InverseHessian h(theta.size());
  auto g = ev.gradient(theta, mu, p.execution);
  double step = 1.0;
  int it = 0;
  for (; it < p.max_iterations; ++it) {
    if (dot(g, g) < 1e-24) break;
    std::vector<double> dir;
    if (bfgs) {
      dir = h.direction(g);
      if (!(dot(dir, g) < 0.0)) {
        h.reset();
        dir = h.direction(g);
      }
    } else {
      dir.resize(g.size());
      for (std::size_t k = 0; k < g.size(); ++k) dir[k] = -g[k];
    }
    const double slope = dot(dir, g);

    std::vector<double> trial(theta.size());
    auto move_to = [&](double t) {
      for (std::size_t k = 0; k < theta.size(); ++k) trial[k] = theta[k] + t * dir[k];
    };

    bool accepted = false;
    std::vector<double> best_x;
    ObjectiveValue best_v;
    std::vector<double> best_g;
    if (bfgs) {
      double lo = 0.0, hi = std::numeric_limits<double>::infinity(), t = 1.0;
      for (int trial_no = 0; trial_no < kMaxTrials && t >= kMinStep; ++trial_no) {
        move_to(t);
        auto next = ev.at_theta(trial, mu);
        if (!(next.total <= cur.total + kArmijo * t * slope)) {
          hi = t;
        } else {
          auto g_next = ev.gradient(trial, mu, p.execution);
          best_x = trial;
          best_v = next;
          best_g = g_next;
          accepted = true;
          if (dot(g_next, dir) >= kWolfe * slope) break;
          lo = t;
        }
        t = std::isfinite(hi) ? 0.5 * (lo + hi) : 2.0 * lo;
        if (std::isfinite(hi) && hi - lo < kMinStep) break;
      }
    } else {
      for (double t = step; t >= kMinStep; t *= 0.5) {
        move_to(t);
        auto next = ev.at_theta(trial, mu);
        if (next.total <= cur.total + kArmijo * t * slope) {
          step = std::min(2.0 * t, 1e3);
          best_x = trial;
          best_v = std::move(next);
          best_g = ev.gradient(best_x, mu, p.execution);
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) {
      if (!bfgs) break;
      h.reset();
      // A reset only helps if the last direction was not already -g.
      bool was_steepest = true;
      for (std::size_t k = 0; k < g.size() && was_steepest; ++k) was_steepest = dir[k] == -g[k];
      if (was_steepest) break;
      continue;
    }
    if (bfgs) {
      std::vector<double> s(theta.size()), y(theta.size());
      for (std::size_t k = 0; k < theta.size(); ++k) {
        s[k] = best_x[k] - theta[k];
        y[k] = best_g[k] - g[k];
      }
      h.update(s, y);
    }
    theta = std::move(best_x);
    g = std::move(best_g);
    cur = std::move(best_v);
  }
  return {std::move(theta), std::move(cur), it};
}

struct RestartRun {
  std::vector<SearchPoint> points;  // one per penalty weight
  std::vector<double> theta;        // after the last weight
  ObjectiveValue final_value;
  int iterations = 0;
};

RestartRun run_restart(const Evaluator& ev, const SearchProblem& p,
                       std::span<const double> schedule, std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> dist(-p.init_scale, p.init_scale);
  std::vector<double> theta(p.parameter_count());
  for (auto& t : theta) t = dist(rng);

  RestartRun run;
  for (double mu : schedule) {
    auto d = descend(ev, p, std::move(theta), mu);
    theta = std::move(d.theta);
    run.iterations += d.iterations;
    run.points.push_back({restart, mu, d.value.total, d.value.negativity_sum, d.value.deviation_sum,
                          d.value.max_deviation, d.iterations});
    run.final_value = std::move(d.value);
  }
  run.theta = std::move(theta);
  return run;
}

}  // namespace

SearchProblem set_f_problem(double overlap, std::size_t ancilla_dim) {
  if (!(overlap > 0.0 && overlap < 1.0)) throw InputError("set_f_problem: overlap must lie in (0, 1)");
  const PureState alpha = kets::zero();
  const PureState beta = PureState::normalized({overlap, std::sqrt(1.0 - overlap * overlap)});
  SearchProblem p;
  p.kind = ProblemKind::SetF;
  for (const auto& s : family_F(alpha, beta)) p.states.push_back(s.density(SubsystemLayout::qubits(2)));
  p.ancilla_dim = ancilla_dim;
  p.ancilla_init = ancilla_ground(ancilla_dim);
  return p;
}

SearchProblem lemma_problem(std::size_t ancilla_dim) {
  const double a = M_PI / 8.0;
  SearchProblem p;
  p.kind = ProblemKind::Lemma;
  p.states.push_back(PureState::normalized({std::cos(a), 0.0, 0.0, std::sin(a)})
                         .density(SubsystemLayout::qubits(2)));
  p.states.push_back(kron(kets::zero(), kets::plus()).density(SubsystemLayout::qubits(2)));
  p.ancilla_dim = ancilla_dim;
  p.ancilla_init = ancilla_ground(ancilla_dim);
  return p;
}

Matrix hermitian_generator(std::size_t k, std::size_t d) {
  if (k >= d * d) throw InputError("hermitian_generator: index out of range");
  std::vector<double> theta(d * d, 0.0);
  theta[k] = 1.0;
  return hamiltonian(theta, d);
}

Matrix generator_sum(const UnitaryParams& params) {
  check_params(params);
  return hamiltonian(params.theta, params.dim);
}

Matrix build_unitary(const UnitaryParams& params) { return expm_i_hermitian(generator_sum(params)); }

ObjectiveValue objective(const UnitaryParams& params, const SearchProblem& problem, double mu) {
  check_params(params);
  if (params.dim != problem.unitary_dim()) throw InputError("objective: parameter dimension mismatch");
  return Evaluator(problem).at_theta(params.theta, mu);
}

ObjectiveValue objective_for_unitary(const Matrix& u, const SearchProblem& problem, double mu) {
  return Evaluator(problem).with_unitary(u, mu);
}

std::vector<double> fd_gradient(const std::function<double(std::span<const double>)>& f,
                                std::span<const double> x, double step) {
  const std::size_t n = x.size();
  std::vector<double> g(n);
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> probe(x.begin(), x.end());
    probe[k] = x[k] + step;
    const double up = f(probe);
    probe[k] = x[k] - step;
    const double down = f(probe);
    g[k] = (up - down) / (2.0 * step);
  }
  return g;
}

std::vector<double> fd_gradient_serial(const std::function<double(std::span<const double>)>& f,
                                       std::span<const double> x, double step) {
  std::vector<double> g(x.size());
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t k = 0; k < x.size(); ++k) {
    probe[k] = x[k] + step;
    const double up = f(probe);
    probe[k] = x[k] - step;
    const double down = f(probe);
    probe[k] = x[k];
    g[k] = (up - down) / (2.0 * step);
  }
  return g;
}

SearchResult minimize(const SearchProblem& problem, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw InputError("minimize: need at least one restart");
  if (problem.penalty_weights.empty()) throw InputError("minimize: empty penalty schedule");
  std::vector<double> schedule = problem.penalty_weights;
  std::sort(schedule.begin(), schedule.end());

  const Evaluator ev(problem);
  const std::size_t nr = static_cast<std::size_t>(restarts);
  std::vector<RestartRun> runs(nr);
  if (problem.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t r = 0; r < nr; ++r) runs[r] = run_restart(ev, problem, schedule, seed, r);
  } else {
    for (std::size_t r = 0; r < nr; ++r) runs[r] = run_restart(ev, problem, schedule, seed, r);
  }

  SearchResult res;
  res.seed = seed;
  res.initial_negativity =
      ev.at_theta(std::vector<double>(problem.parameter_count(), 0.0), 0.0).negativity_sum;

  std::size_t best = 0;
  for (std::size_t r = 1; r < nr; ++r)
    if (runs[r].final_value.total < runs[best].final_value.total) best = r;
  res.restart = best;
  res.best_theta = {problem.unitary_dim(), runs[best].theta};
  res.negativity_terms = runs[best].final_value.negativities;
  res.marginal_deviation = runs[best].final_value.max_deviation;
  res.objective = runs[best].final_value.total;
  res.mu = schedule.back();
  res.iterations = runs[best].iterations;

  for (const auto& run : runs)
    for (const auto& pt : run.points) {
      res.points.push_back(pt);
      if (pt.max_deviation <= problem.feasibility_tol &&
          (!res.best_feasible || pt.negativity_sum < res.best_feasible->negativity_sum))
        res.best_feasible = pt;
    }

  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const SearchPoint* pick = &runs[0].points[i];
    for (std::size_t r = 1; r < nr; ++r)
      if (runs[r].points[i].objective < pick->objective) pick = &runs[r].points[i];
    res.raw_curve.push_back({schedule[i], pick->deviation_sum, pick->negativity_sum});
  }
  res.trade_off_curve = res.raw_curve;
  const bool monotone = std::is_sorted(res.raw_curve.begin(), res.raw_curve.end(),
                                       [](const TradeOffPoint& a, const TradeOffPoint& b) {
                                         return a.deviation > b.deviation;
                                       });
  if (!monotone) {
    auto pairs = res.raw_curve;
    std::stable_sort(pairs.begin(), pairs.end(), [](const TradeOffPoint& a, const TradeOffPoint& b) {
      return a.deviation > b.deviation;
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      res.trade_off_curve[i].deviation = pairs[i].deviation;
      res.trade_off_curve[i].negativity = pairs[i].negativity;
    }
  }
  return res;
}

}  // namespace qtele

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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "qtele/kernels.hpp"
#include "qtele/search.hpp"

namespace {

using namespace qtele;

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (auto& z : m.data()) z = {g(rng), g(rng)};
  return m;
}

template <Matrix (*F)(const Matrix&, const Matrix&)>
void BM_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
  state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_matmul<kernels::serial::matmul>)->Name("matmul/serial")->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_matmul<kernels::matmul>)->Name("matmul/omp")->Arg(32)->Arg(64)->Arg(128);

template <Matrix (*F)(const Matrix&, const Matrix&)>
void BM_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 3), b = random_matrix(16, 4);
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}
BENCHMARK(BM_kron<kernels::serial::kron>)->Name("kron/serial")->Arg(4)->Arg(16);
BENCHMARK(BM_kron<kernels::kron>)->Name("kron/omp")->Arg(4)->Arg(16);

template <Matrix (*F)(const Matrix&, std::span<const std::size_t>, std::span<const std::size_t>)>
void BM_partial_trace(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  const std::vector<std::size_t> dims(qubits, 2);
  const std::vector<std::size_t> keep{0, qubits - 1};
  const Matrix rho = random_matrix(std::size_t{1} << qubits, 5);
  for (auto _ : state) benchmark::DoNotOptimize(F(rho, dims, keep));
}
BENCHMARK(BM_partial_trace<kernels::serial::partial_trace>)->Name("partial_trace/serial")->Arg(6)->Arg(8);
BENCHMARK(BM_partial_trace<kernels::partial_trace>)->Name("partial_trace/omp")->Arg(6)->Arg(8);

template <bool Parallel>
void BM_fd_gradient(benchmark::State& state) {
  const SearchProblem p = set_f_problem(0.7, static_cast<std::size_t>(state.range(0)));
  std::vector<double> theta(p.parameter_count());
  for (std::size_t k = 0; k < theta.size(); ++k) theta[k] = 0.01 * static_cast<double>(k % 7);
  auto f = [&](std::span<const double> t) { return objective({p.unitary_dim(), {t.begin(), t.end()}}, p, 10.0).total; };
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? fd_gradient(f, theta, p.fd_step) : fd_gradient_serial(f, theta, p.fd_step));
}
BENCHMARK(BM_fd_gradient<false>)->Name("fd_gradient/serial")->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fd_gradient<true>)->Name("fd_gradient/omp")->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

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

#include "qtele/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qtele/errors.hpp"
#include "qtele/kernels.hpp"
#include "qtele/linalg.hpp"

namespace qtele {

SubsystemLayout::SubsystemLayout(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InputError("SubsystemLayout: no factors");
  for (std::size_t d : dims_)
    if (d < 2) throw InputError("SubsystemLayout: every factor dimension must be >= 2");
}

SubsystemLayout SubsystemLayout::qubits(std::size_t n) {
  return SubsystemLayout(std::vector<std::size_t>(n, 2));
}

std::size_t SubsystemLayout::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

SubsystemLayout SubsystemLayout::restricted(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> dims;
  for (std::size_t k : sorted) {
    if (k >= dims_.size()) throw InputError("SubsystemLayout: factor index out of range");
    dims.push_back(dims_[k]);
  }
  return SubsystemLayout(std::move(dims));
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
  auto dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  return SubsystemLayout(std::move(dims));
}

DensityMatrix::DensityMatrix(Matrix mat, SubsystemLayout layout)
    : mat_(std::move(mat)), layout_(std::move(layout)) {
  const auto& tol = tolerances();
  if (!mat_.is_square()) throw InputError("DensityMatrix: matrix is not square");
  if (layout_.total() != mat_.rows())
    throw InputError("DensityMatrix: layout does not match matrix dimension");
  if (mat_.hermiticity_error() > tol.equality)
    throw InputError("DensityMatrix: matrix is not Hermitian");
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > tol.equality) throw InputError("DensityMatrix: trace is not 1");
  for (const auto& z : mat_.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("DensityMatrix: non-finite entry");
  mat_ = mat_.hermitian_part();
  if (min_eigenvalue(mat_) < -tol.psd)
    throw InputError("DensityMatrix: matrix is not positive semidefinite");
}

DensityMatrix::DensityMatrix(Matrix mat)
    : DensityMatrix(mat, SubsystemLayout({mat.rows()})) {}

PureState::PureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw InputError("PureState: empty vector");
  for (const auto& z : amps_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("PureState: non-finite amplitude");
  if (std::abs(norm(amps_) - 1.0) > tolerances().equality)
    throw InputError("PureState: vector is not normalized");
}

PureState PureState::normalized(Vector amplitudes) {
  const double n = norm(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw InputError("PureState: cannot normalize");
  for (auto& z : amplitudes) z /= n;
  return PureState(std::move(amplitudes));
}

DensityMatrix PureState::density(const SubsystemLayout& layout) const {
  return DensityMatrix(Matrix::projector(amps_), layout);
}

DensityMatrix PureState::density() const { return DensityMatrix(Matrix::projector(amps_)); }

PureState kron(const PureState& a, const PureState& b) {
  return PureState::normalized(kron(std::span(a.amplitudes()), std::span(b.amplitudes())));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()), a.layout().concat(b.layout()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  if (keep.empty()) throw InputError("partial_trace: nothing to keep");
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("partial_trace: repeated factor index");
  auto layout = rho.layout().restricted(sorted);
  auto reduced = kernels::partial_trace(rho.matrix(), rho.layout().dims(), sorted);
  return DensityMatrix(std::move(reduced), std::move(layout));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

namespace {

std::vector<std::size_t> digits_of(std::size_t idx, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t f = dims.size(); f-- > 0;) {
    d[f] = idx % dims[f];
    idx /= dims[f];
  }
  return d;
}

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  std::vector<std::size_t> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i || sorted.size() != n) throw InputError("permute_factors: not a permutation");
}

}  // namespace

Matrix permute_factors(const Matrix& m, const SubsystemLayout& layout,
                       std::span<const std::size_t> perm) {
  const auto& dims = layout.dims();
  check_permutation(perm, dims.size());
  const std::size_t n = layout.total();
  std::vector<std::size_t> new_dims(dims.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_dims[i] = dims[perm[i]];

  std::vector<std::size_t> map(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto d = digits_of(r, dims);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) idx = idx * new_dims[i] + d[perm[i]];
    map[r] = idx;
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(map[r], map[c]) = m(r, c);
  return out;
}

DensityMatrix permute_factors(const DensityMatrix& rho, std::span<const std::size_t> perm) {
  std::vector<std::size_t> new_dims;
  for (std::size_t p : perm) new_dims.push_back(rho.layout().dim(p));
  return DensityMatrix(permute_factors(rho.matrix(), rho.layout(), perm),
                       SubsystemLayout(std::move(new_dims)));
}

Matrix expand_operator(const Matrix& op, std::span<const std::size_t> targets,
                       const SubsystemLayout& layout) {
  const auto& dims = layout.dims();
  std::vector<bool> is_target(dims.size(), false);
  std::size_t op_dim = 1;
  for (std::size_t t : targets) {
    if (t >= dims.size() || is_target[t]) throw InputError("expand_operator: bad target list");
    is_target[t] = true;
    op_dim *= dims[t];
  }
  if (op.rows() != op_dim || op.cols() != op_dim)
    throw InputError("expand_operator: operator dimension does not match targets");

  const std::size_t n = layout.total();
  std::vector<std::size_t> sub(n), rest(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto d = digits_of(r, dims);
    std::size_t s = 0, o = 0;
    for (std::size_t t : targets) s = s * dims[t] + d[t];
    for (std::size_t f = 0; f < dims.size(); ++f)
      if (!is_target[f]) o = o * dims[f] + d[f];
    sub[r] = s;
    rest[r] = o;
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rest[r] == rest[c]) out(r, c) = op(sub[r], sub[c]);
  return out;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

double min_eigenvalue(const Matrix& m) {
  return eig_hermitian(m.hermitian_part()).values.front();
}

}  // namespace qtele

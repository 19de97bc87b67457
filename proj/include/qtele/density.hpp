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
#include <span>
#include <vector>

#include "qtele/matrix.hpp"

namespace qtele {

/// Tensor-factor dimensions of a composite system; factor 0 is the most
/// significant digit of a basis index.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<std::size_t> dims);
  static SubsystemLayout qubits(std::size_t n);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }
  std::size_t dim(std::size_t factor) const { return dims_.at(factor); }
  std::size_t total() const;

  SubsystemLayout restricted(std::span<const std::size_t> keep) const;
  SubsystemLayout concat(const SubsystemLayout& other) const;

  friend bool operator==(const SubsystemLayout&, const SubsystemLayout&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Validated quantum state: Hermitian, unit trace, positive semidefinite,
/// annotated with its factor layout. Immutable once built.
class DensityMatrix {
 public:
  /// Throws InputError if any invariant fails at the current tolerances.
  DensityMatrix(Matrix mat, SubsystemLayout layout);
  /// Single-factor layout.
  explicit DensityMatrix(Matrix mat);

  const Matrix& matrix() const { return mat_; }
  const SubsystemLayout& layout() const { return layout_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  Matrix mat_;
  SubsystemLayout layout_;
};

/// Normalized state vector.
class PureState {
 public:
  /// Throws InputError unless the norm is 1 within the equality tolerance.
  explicit PureState(Vector amplitudes);
  /// Rescales to unit norm; zero vectors are rejected.
  static PureState normalized(Vector amplitudes);

  const Vector& amplitudes() const { return amps_; }
  std::size_t dim() const { return amps_.size(); }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  DensityMatrix density(const SubsystemLayout& layout) const;
  DensityMatrix density() const;

 private:
  Vector amps_;
};

PureState kron(const PureState& a, const PureState& b);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the listed factors (order of `keep` is irrelevant; the
/// result lists kept factors in ascending index order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Reorder factors: new factor i is old factor perm[i].
Matrix permute_factors(const Matrix& m, const SubsystemLayout& layout,
                       std::span<const std::size_t> perm);
DensityMatrix permute_factors(const DensityMatrix& rho, std::span<const std::size_t> perm);

/// Full-space matrix of `op` acting on `targets` (in the order given) and
/// identity elsewhere.
Matrix expand_operator(const Matrix& op, std::span<const std::size_t> targets,
                       const SubsystemLayout& layout);

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const Matrix& m);

}  // namespace qtele

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

#include "qtele/matrix.hpp"

// Data-parallel kernels behind the matrix layer. The default namespace holds
// the OpenMP versions; qtele::kernels::serial keeps straight loop references
// that compute every output entry with the same summation order, so both
// paths agree bit for bit.
namespace qtele::kernels {

// Below this many multiply-adds the parallel region costs more than it saves.
inline constexpr std::size_t kParallelThreshold = 1 << 15;

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
/// Trace out every factor not listed in keep (sorted, unique).
Matrix partial_trace(const Matrix& rho, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep);

namespace serial {
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix partial_trace(const Matrix& rho, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep);
}  // namespace serial

}  // namespace qtele::kernels

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


// State files, built-in named states and basis specs for the command-line tool.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qtele/density.hpp"
#include "qtele/states.hpp"

namespace qtele::cli {

using Json = nlohmann::json;

struct NamedState {
  DensityMatrix state;
  std::string name;
  std::string description;
};

/// {"dims": [...], "matrix": [[[re, im], ...], ...], "name": ..., "description": ...}
Json state_to_json(const DensityMatrix& rho, const std::string& name = "",
                   const std::string& description = "");
/// Validates shape and density-matrix invariants. Throws InputError.
NamedState state_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// bell0..bell3, classical-z, classical-x, zero, one, plus, minus,
/// setF:<c>:<i> (i = 0, 1, 2), lemma-s:<i> (i = 0, 1).
std::optional<NamedState> builtin_state(std::string_view name);

/// A built-in name or a path to a state file.
NamedState load_state(const std::string& spec);
void save_state(const std::string& path, const NamedState& s);

/// "z", "x", or a file {"b0": [[re, im], [re, im]], "b1": [...]}.
QubitBasis load_basis(const std::string& spec);
Json basis_to_json(const QubitBasis& b);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

std::string read_file(const std::string& path);

}  // namespace qtele::cli

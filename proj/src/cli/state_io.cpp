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


#include "qtele/cli/state_io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "qtele/errors.hpp"
#include "qtele/search.hpp"

namespace qtele::cli {
namespace {

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("state file: each entry must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw InputError(std::string(what) + ": cannot parse '" + std::string(s) + "'");
  return v;
}

std::size_t parse_index(std::string_view s, std::size_t count, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v >= count)
    throw InputError(std::string(what) + ": index must be below " + std::to_string(count));
  return v;
}

PureState read_ket(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("basis file: kets must have two amplitudes");
  return PureState({complex_from_json(j[0]), complex_from_json(j[1])});
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("state file: matrix must be a non-empty array");
  const std::size_t n = j.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw InputError("state file: matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Json state_to_json(const DensityMatrix& rho, const std::string& name, const std::string& description) {
  Json j;
  j["dims"] = rho.layout().dims();
  j["matrix"] = matrix_to_json(rho.matrix());
  if (!name.empty()) j["name"] = name;
  if (!description.empty()) j["description"] = description;
  return j;
}

NamedState state_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("state file: top level must be an object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty())
    throw InputError("state file: 'dims' is required");
  std::vector<std::size_t> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 2)
      throw InputError("state file: dims must be integers >= 2");
    dims.push_back(d.get<std::size_t>());
  }
  if (!j.contains("matrix")) throw InputError("state file: 'matrix' is required");
  NamedState s{DensityMatrix(matrix_from_json(j["matrix"]), SubsystemLayout(dims)), "", ""};
  if (j.contains("name") && j["name"].is_string()) s.name = j["name"].get<std::string>();
  if (j.contains("description") && j["description"].is_string())
    s.description = j["description"].get<std::string>();
  return s;
}

std::optional<NamedState> builtin_state(std::string_view name) {
  const std::string n(name);
  if (n.size() == 5 && n.starts_with("bell") && n[4] >= '0' && n[4] <= '3') {
    const int k = n[4] - '0';
    static const char* labels[] = {"Phi+", "Phi-", "Psi+", "Psi-"};
    return NamedState{bell_state(k), n, std::string("Bell state ") + labels[k]};
  }
  if (n == "classical-z")
    return NamedState{classical_channel(QubitBasis::computational()).state, n,
                      "(|00><00| + |11><11|)/2"};
  if (n == "classical-x")
    return NamedState{classical_channel(QubitBasis::hadamard()).state, n, "(|++><++| + |--><--|)/2"};
  if (n == "zero") return NamedState{kets::zero().density(), n, "|0>"};
  if (n == "one") return NamedState{kets::one().density(), n, "|1>"};
  if (n == "plus") return NamedState{kets::plus().density(), n, "|+>"};
  if (n == "minus") return NamedState{kets::minus().density(), n, "|->"};

  if (n.starts_with("setF:")) {
    const std::string rest = n.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("setF:<c>:<i> needs a member index");
    const double c = parse_double(std::string_view(rest).substr(0, colon), "setF overlap");
    if (!(c > 0.0 && c < 1.0)) throw InputError("setF overlap must lie in (0, 1)");
    const std::size_t i = parse_index(std::string_view(rest).substr(colon + 1), 3, "setF member");
    const PureState beta = PureState::normalized({c, std::sqrt(1.0 - c * c)});
    const auto members = family_F(kets::zero(), beta);
    return NamedState{members[i].density(SubsystemLayout::qubits(2)), n, "member of the set F"};
  }
  if (n.starts_with("lemma-s:")) {
    const std::size_t i = parse_index(std::string_view(n).substr(8), 2, "lemma-s member");
    return NamedState{lemma_problem(2).states[i], n, "member of a set with noncommuting B marginals"};
  }
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NamedState load_state(const std::string& spec) {
  if (auto b = builtin_state(spec)) return *std::move(b);
  if (!std::filesystem::exists(spec)) throw InputError("'" + spec + "' is neither a built-in state nor a file");
  Json j;
  try {
    j = Json::parse(read_file(spec));
  } catch (const Json::parse_error& e) {
    throw InputError("'" + spec + "': " + e.what());
  }
  auto s = state_from_json(j);
  if (s.name.empty()) s.name = spec;
  return s;
}

void save_state(const std::string& path, const NamedState& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << state_to_json(s.state, s.name, s.description).dump(2) << '\n';
}

QubitBasis load_basis(const std::string& spec) {
  if (spec == "z") return QubitBasis::computational();
  if (spec == "x") return QubitBasis::hadamard();
  Json j;
  try {
    j = Json::parse(read_file(spec));
  } catch (const Json::parse_error& e) {
    throw InputError("'" + spec + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("b0") || !j.contains("b1"))
    throw InputError("basis file: 'b0' and 'b1' are required");
  return QubitBasis(read_ket(j["b0"]), read_ket(j["b1"]));
}

Json basis_to_json(const QubitBasis& b) {
  Json j;
  for (std::size_t i = 0; i < 2; ++i) {
    Json ket = Json::array();
    for (const auto& a : b[i].amplitudes()) ket.push_back(complex_to_json(a));
    j[i == 0 ? "b0" : "b1"] = std::move(ket);
  }
  return j;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qtele::cli

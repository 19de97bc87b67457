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


#include "qtele/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtele/analysis.hpp"
#include "qtele/cli/state_io.hpp"
#include "qtele/errors.hpp"
#include "qtele/linalg.hpp"
#include "qtele/protocols.hpp"
#include "qtele/search.hpp"

namespace qtele::cli {
namespace {

// Human-readable numbers: 6 significant digits, roundoff-sized entries shown as 0.
std::string num(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

double clean(double v) { return std::abs(v) < 1e-14 ? 0.0 : v; }

std::string entry(Complex z) {
  const double re = clean(z.real());
  const double im = clean(z.imag());
  if (im == 0.0) return num(re);
  if (re == 0.0) return num(im) + "i";
  return num(re) + (im < 0 ? "-" : "+") + num(std::abs(im)) + "i";
}

std::string show(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + entry(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::string show(const PureState& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? ", " : "") + entry(v.amplitudes()[i]);
  return s + ")";
}

std::string show(const BlochVector& r) {
  return "(" + num(clean(r.x)) + ", " + num(clean(r.y)) + ", " + num(clean(r.z)) + ")";
}

Json bloch_json(const BlochVector& r) { return Json::array({r.x, r.y, r.z}); }

Json ket_json(const PureState& v) {
  Json a = Json::array();
  for (const auto& z : v.amplitudes()) a.push_back(Json::array({z.real(), z.imag()}));
  return a;
}

// Options every subcommand accepts.
struct Common {
  std::string out_path;
  bool force = false;
  bool json = false;
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_path, "Write the JSON run report to this file");
  sub->add_flag("--force", c.force, "Allow --out to replace an existing file");
  sub->add_flag("--json", c.json, "Print the JSON report instead of the human summary");
  sub->add_flag("--timing", c.timing, "Record wall time in the report");
}

class Report {
 public:
  explicit Report(const std::vector<std::string>& args) { j_["command"] = args; }

  void inputs(const Json& in) { j_["inputs_digest"] = "fnv1a64:" + fnv1a_hex(in.dump()); }
  Json& outputs() { return j_["outputs"]; }

  bool check(const std::string& name, bool passed, double value, double tolerance) {
    j_["checks"].push_back({{"name", name}, {"passed", passed}, {"value", value}, {"tolerance", tolerance}});
    if (!passed) failed_ = true;
    return passed;
  }
  bool failed() const { return failed_; }

  void error(const std::string& message) { j_["error"] = message; }
  void wall_time(double seconds) { j_["wall_time_s"] = seconds; }

  Json finish(int code) {
    if (!j_.contains("checks")) j_["checks"] = Json::array();
    j_["exit_code"] = code;
    return j_;
  }

 private:
  Json j_;
  bool failed_ = false;
};

struct Context {
  Report report;
  std::ostringstream text;  // human summary
  double tol = 1e-12;
};

// Qubit w P[b0] + (1 - w) P[b1], or a loaded state.
DensityMatrix qubit_input(const std::optional<double>& w, const std::string& state_spec,
                          const QubitBasis& basis) {
  if (w) {
    if (!(*w >= 0.0 && *w <= 1.0)) throw InputError("--w must lie in [0, 1]");
    return commuting_family(*w, basis);
  }
  if (state_spec.empty()) throw InputError("one of --w or --state is required");
  return load_state(state_spec).state;
}

double off_diagonal_in(const DensityMatrix& rho, const QubitBasis& b) {
  return std::abs(inner(b.b0().amplitudes(), matvec(rho.matrix(), b.b1().amplitudes())));
}

// ---------------------------------------------------------------------------

struct TeleportArgs {
  std::optional<double> w;
  std::string state;
  std::string basis = "z";
  bool expect_exact = false;
};

int cmd_teleport(const TeleportArgs& a, Context& ctx) {
  const QubitBasis basis = load_basis(a.basis);
  const DensityMatrix rho = qubit_input(a.w, a.state, basis);
  ctx.report.inputs({{"state", state_to_json(rho)}, {"basis", basis_to_json(basis)}});

  const auto t = teleport_commuting(rho, basis);
  const bool commuting = off_diagonal_in(rho, basis) <= tolerances().hermitian_input;

  Json& o = ctx.report.outputs();
  o["input"] = state_to_json(t.input);
  o["basis"] = basis_to_json(basis);
  o["channel"] = t.channel;
  o["classical_bits"] = t.classical_bits;
  o["input_commutes_with_basis"] = commuting;
  o["branches"] = Json::array();
  for (const auto& b : t.branches)
    o["branches"].push_back({{"outcome", b.outcome},
                             {"probability", b.probability},
                             {"correction", b.correction},
                             {"bob_state", state_to_json(b.bob_state)}});
  o["averaged_output"] = state_to_json(t.averaged_output);
  o["fidelity"] = t.fidelity_to_input;

  auto& s = ctx.text;
  s << "input     " << show(rho.matrix()) << "\n";
  s << "channel   " << t.channel << ", basis " << a.basis << ", " << t.classical_bits
    << " classical bit(s)\n";
  s << "outcome  probability  correction  Bob's state\n";
  for (const auto& b : t.branches)
    s << std::left << std::setw(9) << b.outcome << std::setw(13) << num(b.probability) << std::setw(12)
      << b.correction << show(b.bob_state.matrix()) << "\n";
  s << "output    " << show(t.averaged_output.matrix()) << "\n";
  s << "fidelity  " << num(t.fidelity_to_input) << "\n";
  if (!commuting) s << "note      input does not commute with the channel basis; output is dephased\n";

  if (commuting || a.expect_exact) {
    const bool ok = ctx.report.check("exact", std::abs(1.0 - t.fidelity_to_input) <= ctx.tol,
                                     t.fidelity_to_input, ctx.tol);
    s << "check     exact teleportation: " << (ok ? "pass" : "FAIL") << "\n";
  }
  return ctx.report.failed() ? kExitCheck : kExitOk;
}

// ---------------------------------------------------------------------------

struct BroadcastArgs {
  std::optional<double> w;
  std::string state;
  std::string basis = "z";
  int n = 0;
};

int cmd_broadcast(const BroadcastArgs& a, Context& ctx) {
  const QubitBasis basis = load_basis(a.basis);
  const DensityMatrix rho = qubit_input(a.w, a.state, basis);
  if (a.n < 2) throw InputError("--n must be at least 2");
  ctx.report.inputs({{"state", state_to_json(rho)}, {"basis", basis_to_json(basis)}, {"n", a.n}});

  const DensityMatrix out = broadcast(rho, static_cast<std::size_t>(a.n), basis);
  double max_dev = 0.0;
  Json marginals = Json::array();
  auto& s = ctx.text;
  s << "input     " << show(rho.matrix()) << "\n";
  for (std::size_t k = 0; k < static_cast<std::size_t>(a.n); ++k) {
    const DensityMatrix m = partial_trace(out, {k});
    const double dev = trace_distance(m, rho);
    max_dev = std::max(max_dev, dev);
    marginals.push_back({{"party", k}, {"state", state_to_json(m)}, {"deviation", dev}});
    s << "party " << k << "   " << show(m.matrix()) << "\n";
  }
  Json& o = ctx.report.outputs();
  o["input"] = state_to_json(rho);
  o["n"] = a.n;
  o["marginals"] = std::move(marginals);
  o["max_deviation"] = max_dev;
  o["joint_state"] = state_to_json(out);

  const bool ok = ctx.report.check("marginals_preserved", max_dev <= ctx.tol, max_dev, ctx.tol);
  s << "max marginal deviation " << num(max_dev) << (ok ? "" : "  FAIL") << "\n";
  return ok ? kExitOk : kExitCheck;
}

// ---------------------------------------------------------------------------

struct DecomposeArgs {
  std::string state1;
  std::string state2;
};

int cmd_decompose(const DecomposeArgs& a, Context& ctx) {
  const auto s1 = load_state(a.state1);
  const auto s2 = load_state(a.state2);
  if (s1.state.dim() != 2 || s2.state.dim() != 2) throw InputError("decompose: both states must be qubits");
  ctx.report.inputs({{"state1", state_to_json(s1.state)}, {"state2", state_to_json(s2.state)}});

  Json& o = ctx.report.outputs();
  auto& s = ctx.text;
  const auto c = commutes(s1.state, s2.state);
  o["commutator_norm"] = c.norm;
  o["commuting"] = c.commute;
  if (c.commute) {
    const QubitBasis b = common_eigenbasis(s1.state, s2.state);
    o["common_basis"] = basis_to_json(b);
    s << "states commute (commutator norm " << num(c.norm) << ")\n";
    s << "common eigenbasis  b0 = " << show(b.b0()) << "  b1 = " << show(b.b1()) << "\n";
    return kExitOk;
  }
  const auto d = noncommuting_decomposition(s1.state, s2.state);
  o["psi"] = {{"amplitudes", ket_json(d.psi)}, {"bloch", bloch_json(d.psi_bloch)}};
  o["phi"] = {{"amplitudes", ket_json(d.phi)}, {"bloch", bloch_json(d.phi_bloch)}};
  o["lambda1"] = d.lambda1;
  o["lambda2"] = d.lambda2;
  o["overlap"] = d.overlap;
  o["t_minus"] = d.t_minus;
  o["t_plus"] = d.t_plus;
  o["reconstruction_error"] = d.reconstruction_error;
  o["ill_conditioned"] = d.ill_conditioned;

  s << "psi      " << show(d.psi) << "  Bloch " << show(d.psi_bloch) << "\n";
  s << "phi      " << show(d.phi) << "  Bloch " << show(d.phi_bloch) << "\n";
  s << "lambda1  " << num(d.lambda1) << "\n";
  s << "lambda2  " << num(d.lambda2) << "\n";
  s << "overlap  " << num(d.overlap) << "\n";
  s << "reconstruction error " << num(d.reconstruction_error) << "\n";
  if (d.ill_conditioned) s << "note     states nearly commute; the decomposition is ill-conditioned\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct DisentangleArgs {
  std::vector<std::string> set;
  std::string side = "B";
};

int cmd_disentangle(const DisentangleArgs& a, Context& ctx) {
  std::vector<DensityMatrix> set;
  Json in = Json::array();
  for (const auto& spec : a.set) {
    set.push_back(load_state(spec).state);
    in.push_back(state_to_json(set.back()));
  }
  ctx.report.inputs({{"set", in}, {"side", a.side}});
  const Side side = a.side == "A" ? Side::A : Side::B;

  const auto outs = disentangle_by_teleport(set, side);
  Json& o = ctx.report.outputs();
  o["side"] = a.side;
  o["states"] = Json::array();
  double worst_dev = 0.0, worst_eig = 0.0;
  bool all_separable = true;
  auto& s = ctx.text;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const auto ppt = ppt_report(outs[i]);
    const double dev_a = trace_distance(partial_trace(outs[i], {0}), partial_trace(set[i], {0}));
    const double dev_b = trace_distance(partial_trace(outs[i], {1}), partial_trace(set[i], {1}));
    worst_dev = std::max({worst_dev, dev_a, dev_b});
    worst_eig = std::min(worst_eig, ppt.min_eigenvalue);
    all_separable = all_separable && ppt.separable;
    o["states"].push_back({{"input", a.set[i]},
                           {"output", state_to_json(outs[i])},
                           {"ppt_min_eigenvalue", ppt.min_eigenvalue},
                           {"negativity", ppt.negativity},
                           {"separable", ppt.separable},
                           {"deviation_A", dev_a},
                           {"deviation_B", dev_b}});
    s << a.set[i] << "\n  output     " << show(outs[i].matrix()) << "\n  separable  "
      << (ppt.separable ? "yes" : "no") << " (min PT eigenvalue " << num(ppt.min_eigenvalue)
      << ")\n  marginal deviation A " << num(dev_a) << ", B " << num(dev_b) << "\n";
  }
  const bool sep_ok = ctx.report.check("separable", all_separable, worst_eig, 0.0);
  const bool dev_ok = ctx.report.check("marginals_preserved", worst_dev <= ctx.tol, worst_dev, ctx.tol);
  return sep_ok && dev_ok ? kExitOk : kExitCheck;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::string problem = "setF";
  double overlap = 1.0 / std::sqrt(2.0);
  std::size_t ancilla_dim = 4;
  int restarts = 20;
  std::uint64_t seed = 7;
  std::vector<double> mu_schedule{1.0, 10.0, 100.0, 1000.0};
  int max_iterations = 200;
  double threshold = 0.9;
  bool serial = false;
};

Json point_json(const SearchPoint& p) {
  return {{"restart", p.restart},         {"mu", p.mu},
          {"objective", p.objective},     {"negativity", p.negativity_sum},
          {"deviation", p.deviation_sum}, {"max_deviation", p.max_deviation},
          {"iterations", p.iterations}};
}

Json curve_json(const std::vector<TradeOffPoint>& c) {
  Json a = Json::array();
  for (const auto& p : c) a.push_back({{"mu", p.mu}, {"deviation", p.deviation}, {"negativity", p.negativity}});
  return a;
}

int cmd_search(const SearchArgs& a, Context& ctx) {
  if (a.restarts < 1) throw InputError("--restarts must be at least 1");
  if (a.max_iterations < 1) throw InputError("--max-iterations must be at least 1");
  if (a.mu_schedule.empty()) throw InputError("--mu-schedule must not be empty");
  for (double mu : a.mu_schedule)
    if (!(mu >= 0.0) || !std::isfinite(mu)) throw InputError("--mu-schedule entries must be finite and >= 0");
  if (!(a.threshold >= 0.0)) throw InputError("--threshold must be >= 0");

  SearchProblem p = a.problem == "setF" ? set_f_problem(a.overlap, a.ancilla_dim) : lemma_problem(a.ancilla_dim);
  p.penalty_weights = a.mu_schedule;
  p.max_iterations = a.max_iterations;
  p.execution = a.serial ? Execution::serial : Execution::parallel;

  Json settings = {{"problem", a.problem},
                   {"ancilla_dim", a.ancilla_dim},
                   {"restarts", a.restarts},
                   {"seed", a.seed},
                   {"mu_schedule", a.mu_schedule},
                   {"max_iterations", a.max_iterations},
                   {"feasibility_tol", p.feasibility_tol},
                   {"threshold_factor", a.threshold}};
  if (a.problem == "setF") settings["overlap"] = a.overlap;
  ctx.report.inputs(settings);

  const SearchResult r = minimize(p, a.restarts, a.seed);
  const double threshold = a.threshold * r.initial_negativity;
  double min_negativity = std::numeric_limits<double>::infinity();
  for (const auto& pt : r.points) min_negativity = std::min(min_negativity, pt.negativity_sum);

  Json& o = ctx.report.outputs();
  o["settings"] = settings;
  o["initial_negativity"] = r.initial_negativity;
  o["best"] = {{"theta", r.best_theta.theta},
               {"dim", r.best_theta.dim},
               {"negativity_terms", r.negativity_terms},
               {"marginal_deviation", r.marginal_deviation},
               {"objective", r.objective},
               {"mu", r.mu},
               {"seed", r.seed},
               {"restart", r.restart},
               {"iterations", r.iterations}};
  o["trade_off_curve"] = curve_json(r.trade_off_curve);
  o["raw_curve"] = curve_json(r.raw_curve);
  o["points"] = Json::array();
  for (const auto& pt : r.points) o["points"].push_back(point_json(pt));
  o["best_feasible"] = r.best_feasible ? point_json(*r.best_feasible) : Json(nullptr);
  o["min_negativity"] = min_negativity;

  Json verdict = {{"threshold", threshold}, {"feasible_found", r.best_feasible.has_value()}};
  if (r.best_feasible) {
    verdict["best_feasible_negativity"] = r.best_feasible->negativity_sum;
    verdict["negativity_at_least_threshold"] = r.best_feasible->negativity_sum >= threshold;
  } else {
    verdict["negativity_at_least_threshold"] = nullptr;
  }
  o["verdict"] = verdict;

  auto& s = ctx.text;
  s << "problem   " << a.problem;
  if (a.problem == "setF") s << " (overlap " << num(a.overlap) << ")";
  s << ", ancilla dim " << a.ancilla_dim << ", " << a.restarts << " restart(s), seed " << a.seed << "\n";
  s << "initial negativity " << num(r.initial_negativity) << "\n";
  s << "mu          deviation     negativity\n";
  for (const auto& c : r.trade_off_curve)
    s << std::left << std::setw(12) << num(c.mu) << std::setw(14) << num(c.deviation) << num(c.negativity) << "\n";
  s << "lowest negativity seen " << num(min_negativity) << "\n";
  if (r.best_feasible) {
    s << "best feasible point: negativity " << num(r.best_feasible->negativity_sum) << ", max deviation "
      << num(r.best_feasible->max_deviation) << " (restart " << r.best_feasible->restart << ", mu "
      << num(r.best_feasible->mu) << ")\n";
    s << "verdict   feasible negativity " << (r.best_feasible->negativity_sum >= threshold ? ">=" : "<")
      << " threshold " << num(threshold) << "\n";
  } else {
    s << "verdict   no point met the feasibility tolerance " << num(p.feasibility_tol) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string ppt;
  std::vector<std::string> commute;
  std::string expect;
};

int cmd_check(const CheckArgs& a, Context& ctx) {
  auto& s = ctx.text;
  Json& o = ctx.report.outputs();
  if (!a.ppt.empty()) {
    if (!a.expect.empty() && a.expect != "separable" && a.expect != "entangled")
      throw InputError("--expect for --ppt must be 'separable' or 'entangled'");
    const auto st = load_state(a.ppt);
    ctx.report.inputs({{"ppt", state_to_json(st.state)}});
    const auto r = ppt_report(st.state);
    o["min_eigenvalue"] = r.min_eigenvalue;
    o["negativity"] = r.negativity;
    o["separable"] = r.separable;
    s << "state              " << st.name << "\n";
    s << "min PT eigenvalue  " << num(r.min_eigenvalue) << "\n";
    s << "negativity         " << num(r.negativity) << "\n";
    s << "separable          " << (r.separable ? "yes" : "no") << "\n";
    if (!a.expect.empty()) {
      const bool ok = ctx.report.check("expect_" + a.expect, r.separable == (a.expect == "separable"),
                                       r.min_eigenvalue, tolerances().psd);
      s << "expect " << a.expect << ": " << (ok ? "pass" : "FAIL") << "\n";
    }
  } else if (!a.commute.empty()) {
    if (!a.expect.empty() && a.expect != "commute" && a.expect != "noncommute")
      throw InputError("--expect for --commute must be 'commute' or 'noncommute'");
    const auto s1 = load_state(a.commute[0]);
    const auto s2 = load_state(a.commute[1]);
    ctx.report.inputs({{"state1", state_to_json(s1.state)}, {"state2", state_to_json(s2.state)}});
    const auto c = commutes(s1.state, s2.state);
    o["commute"] = c.commute;
    o["commutator_norm"] = c.norm;
    s << "commutator norm  " << num(c.norm) << "\n";
    s << "commute          " << (c.commute ? "yes" : "no") << "\n";
    if (!a.expect.empty()) {
      const bool ok = ctx.report.check("expect_" + a.expect, c.commute == (a.expect == "commute"), c.norm, 1e-10);
      s << "expect " << a.expect << ": " << (ok ? "pass" : "FAIL") << "\n";
    }
  } else {
    throw InputError("check needs --ppt or --commute");
  }
  return ctx.report.failed() ? kExitCheck : kExitOk;
}

// ---------------------------------------------------------------------------

std::optional<double> tolerance_from_env() {
  const char* v = std::getenv("TOLERANCE");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const double t = std::strtod(v, &end);
  if (*end != '\0' || !(t > 0.0) || !std::isfinite(t)) throw InputError("TOLERANCE must be a positive number");
  return t;
}

void write_report(const std::string& path, const Json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density-matrix simulator for teleportation over classically correlated channels"};
  app.name("qtele");
  app.require_subcommand(1);

  Common common;
  TeleportArgs ta;
  BroadcastArgs ba;
  DecomposeArgs da;
  DisentangleArgs dis;
  SearchArgs sa;
  CheckArgs ca;
  std::string export_name;

  auto* tp = app.add_subcommand("teleport", "Teleport a qubit through the classically correlated channel");
  tp->add_option("--w", ta.w, "Input w P[b0] + (1 - w) P[b1] in the channel basis");
  tp->add_option("--state", ta.state, "Input state: built-in name or state file")->excludes("--w");
  tp->add_option("--basis", ta.basis, "Channel basis: z, x, or a basis file");
  tp->add_flag("--expect-exact", ta.expect_exact, "Exit 3 unless the fidelity is 1");
  add_common(tp, common);

  auto* bp = app.add_subcommand("broadcast", "Broadcast a qubit to n parties");
  bp->add_option("--w", ba.w, "Input w P[b0] + (1 - w) P[b1] in the channel basis");
  bp->add_option("--state", ba.state, "Input state: built-in name or state file")->excludes("--w");
  bp->add_option("--n", ba.n, "Number of parties (>= 2)")->required();
  bp->add_option("--basis", ba.basis, "Channel basis: z, x, or a basis file");
  add_common(bp, common);

  auto* dp = app.add_subcommand("decompose", "Split two noncommuting qubit states over a common pure pair");
  dp->add_option("--state1", da.state1, "First qubit state")->required();
  dp->add_option("--state2", da.state2, "Second qubit state")->required();
  add_common(dp, common);

  auto* xp = app.add_subcommand("disentangle", "Disentangle a set of two-qubit states by teleporting one side");
  xp->add_option("--set", dis.set, "Member states")->required()->expected(1, -1);
  xp->add_option("--side", dis.side, "Side to teleport")->check(CLI::IsMember({"A", "B"}));
  add_common(xp, common);

  auto* sp = app.add_subcommand("search", "Search for a marginal-preserving disentangling unitary");
  sp->add_option("--problem", sa.problem, "setF or lemma")->check(CLI::IsMember({"setF", "lemma"}));
  sp->add_option("--overlap", sa.overlap, "<alpha|beta> for the setF problem");
  sp->add_option("--ancilla-dim", sa.ancilla_dim, "Ancilla dimension (>= 2)");
  sp->add_option("--restarts", sa.restarts, "Random restarts");
  sp->add_option("--seed", sa.seed, "Generator seed");
  sp->add_option("--mu-schedule", sa.mu_schedule, "Penalty weights, comma separated")->delimiter(',');
  sp->add_option("--max-iterations", sa.max_iterations, "Descent steps per penalty weight");
  sp->add_option("--threshold", sa.threshold, "Verdict threshold as a fraction of the initial negativity");
  sp->add_flag("--serial", sa.serial, "Run restarts and gradients on one thread");
  add_common(sp, common);

  auto* cp = app.add_subcommand("check", "PPT or commutation report");
  auto* ppt_opt = cp->add_option("--ppt", ca.ppt, "Two-qubit state");
  cp->add_option("--commute", ca.commute, "Two states")->expected(2)->excludes(ppt_opt);
  cp->add_option("--expect", ca.expect, "separable|entangled (with --ppt), commute|noncommute (with --commute)");
  add_common(cp, common);

  auto* ep = app.add_subcommand("export", "Write a built-in state to a state file");
  ep->add_option("name", export_name, "Built-in state name")->required();
  add_common(ep, common);

  std::vector<std::string> argv_store{"qtele"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Context ctx{Report(args), {}, 1e-12};
  int code = kExitOk;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (auto t = tolerance_from_env()) ctx.tol = *t;
    if (!common.out_path.empty() && !common.force && std::filesystem::exists(common.out_path))
      throw InputError("'" + common.out_path + "' exists; pass --force to replace it");

    if (ep->parsed()) {
      const auto st = builtin_state(export_name);
      if (!st) throw InputError("unknown built-in state '" + export_name + "'");
      if (common.out_path.empty()) {
        out << state_to_json(st->state, st->name, st->description).dump(2) << '\n';
      } else {
        save_state(common.out_path, *st);
      }
      return kExitOk;
    }
    if (tp->parsed()) code = cmd_teleport(ta, ctx);
    else if (bp->parsed()) code = cmd_broadcast(ba, ctx);
    else if (dp->parsed()) code = cmd_decompose(da, ctx);
    else if (xp->parsed()) code = cmd_disentangle(dis, ctx);
    else if (sp->parsed()) code = cmd_search(sa, ctx);
    else if (cp->parsed()) code = cmd_check(ca, ctx);
  } catch (const NonCommutingError& e) {
    err << "error: " << e.what() << '\n';
    ctx.report.error(e.what());
    code = kExitCheck;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (common.timing)
    ctx.report.wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  const Json report = ctx.report.finish(code);
  if (common.json) {
    out << report.dump(2) << '\n';
  } else {
    out << ctx.text.str();
    if (common.timing) out << "wall time " << num(report["wall_time_s"].get<double>()) << " s\n";
  }
  if (!common.out_path.empty()) {
    try {
      write_report(common.out_path, report);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
  }
  return code;
}

}  // namespace qtele::cli

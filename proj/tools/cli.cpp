// Copyright 2026 The causal-switch-teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <span>

#include "CLI11.hpp"
#include "cst/analytic.hpp"
#include "cst/error.hpp"
#include "cst/experiments.hpp"
#include "cst/optimizer.hpp"
#include "cst/oracle.hpp"
#include "cst/parallel.hpp"
#include "cst/sweep_io.hpp"

namespace cst::cli {
namespace {

using std::numbers::pi;

std::string fixed12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

void line(std::ostream& out, const std::string& key, const std::string& value) { out << key << ' ' << value << '\n'; }

SweepMeta provenance(const RunConfig& cfg) {
  SweepMeta meta = SweepMeta::object();
  meta["tool"] = "cst";
  meta["version"] = std::string(kVersion);
  meta["command"] = cfg.command;
  if (!cfg.sweep_kind.empty()) meta["kind"] = cfg.sweep_kind;
  if (cfg.noise) meta["noise"] = cfg.noise->probs();
  if (cfg.q0) meta["q0"] = *cfg.q0;
  if (cfg.measurement) meta["measurement"] = {{"theta", cfg.measurement->theta()}, {"phi", cfg.measurement->phi()}};
  meta["input"] = {{"theta0", cfg.input.theta0()}, {"phi0", cfg.input.phi0()}};
  meta["seed"] = cfg.seed;
  if (cfg.command == "sweep") {
    if (cfg.sweep_kind == "contour") meta["resolution"] = cfg.resolution;
    if (cfg.sweep_kind != "contour") meta["grid_density"] = cfg.grid_density;
    if (!cfg.q0_samples.empty()) meta["q0_samples"] = cfg.q0_samples;
    if (!cfg.p_samples.empty()) meta["p_samples"] = cfg.p_samples;
  } else if (cfg.command == "optimize") {
    meta["grid_density"] = cfg.grid_density;
  }
  return meta;
}

std::filesystem::path output_path(const RunConfig& cfg, const std::string& stem) {
  if (cfg.out_path) return *cfg.out_path;
  return "cst_" + stem + "." + cfg.format;
}

void write_output(const std::filesystem::path& path, const std::string& content, std::ostream& out) {
  write_file_atomic(path, content);
  line(out, "output", path.string());
}

// Single-row "table" files for fidelity and optimize results.
std::string render_record(const RunConfig& cfg, const std::vector<std::string>& columns,
                          const std::vector<std::vector<std::optional<double>>>& rows,
                          const std::vector<std::string>& row_labels) {
  const SweepMeta meta = provenance(cfg);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      nlohmann::ordered_json obj;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        obj[columns[c]] = rows[r][c] ? nlohmann::ordered_json(*rows[r][c]) : nlohmann::ordered_json(nullptr);
      }
      doc[row_labels[r]] = obj;
    }
    doc["meta"] = meta;
    return doc.dump(2) + "\n";
  }
  std::string csv;
  for (const auto& [key, value] : meta.items()) {
    csv += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  csv += "branch";
  for (const auto& c : columns) csv += "," + csv_escape(c);
  csv += "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    csv += csv_escape(row_labels[r]);
    for (const auto& v : rows[r]) csv += "," + (v ? format_number(*v) : std::string("null"));
    csv += "\n";
  }
  return csv;
}

std::optional<double> fidelity_or_null(const TeleportResult& r) {
  if (r.prob < kNullProbability) return std::nullopt;
  return r.fidelity;
}

// Grid points whose fidelity beats the reported optimum only on a near-impossible outcome.
void warn_near_null(const RunConfig& cfg, const OptimumReport& best, std::ostream& err) {
  const TraceSums sums = trace_sums(*cfg.noise, input_density(cfg.input));
  const ControlSpec c(*cfg.q0);
  const auto thetas = linspace(0.0, pi, cfg.grid_density);
  const auto phis = linspace(-pi, pi, 2 * (cfg.grid_density - 1), false);
  for (double theta : thetas) {
    for (double phi : phis) {
      const TeleportResult r = combine(sums, switch_weights(c, MeasurementSpec(theta, phi)));
      if (r.prob >= kNullProbability && r.prob < kCandidateProbabilityFloor && r.fidelity > best.f_star + 1e-9) {
        err << "warning: fidelity " << fixed12(r.fidelity) << " at theta=" << fixed12(theta)
            << " phi=" << fixed12(phi) << " has success probability " << r.prob << " below "
            << kCandidateProbabilityFloor << "; not reported as the optimum\n";
        return;
      }
    }
  }
}

struct Deviation {
  double worst = 0.0;
  void observe(double v) { worst = std::max(worst, std::abs(v)); }
};

}  // namespace

int cmd_fidelity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ControlSpec c(*cfg.q0);
  TeleportResult measured;
  try {
    measured = evaluate(*cfg.noise, c, *cfg.measurement, cfg.input);
  } catch (const NullProbability& e) {
    err << "degenerate scenario: " << e.what() << '\n';
    return kDegenerate;
  }
  TeleportResult other;
  try {
    other = evaluate(*cfg.noise, c, antipodal(*cfg.measurement), cfg.input);
  } catch (const NullProbability& e) {
    other = {.f_un = 0.0, .prob = e.probability(), .fidelity = 0.0};
  }

  line(out, "f_un", fixed12(measured.f_un));
  line(out, "prob", fixed12(measured.prob));
  line(out, "fidelity", fixed12(measured.fidelity));
  line(out, "orthogonal_f_un", fixed12(other.f_un));
  line(out, "orthogonal_prob", fixed12(other.prob));
  const auto other_fidelity = fidelity_or_null(other);
  line(out, "orthogonal_fidelity", other_fidelity ? fixed12(*other_fidelity) : "null");

  if (cfg.out_path) {
    write_output(*cfg.out_path,
                 render_record(cfg, {"f_un", "prob", "fidelity"},
                               {{measured.f_un, measured.prob, measured.fidelity}, {other.f_un, other.prob, other_fidelity}},
                               {"measured", "orthogonal"}),
                 out);
  }
  return kOk;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ControlSpec c(*cfg.q0);
  OptimizerConfig opt;
  opt.grid_density = cfg.grid_density;
  OptimumReport best;
  try {
    best = optimize_measurement(*cfg.noise, c, cfg.input, opt);
  } catch (const AllPointsNull& e) {
    err << "degenerate scenario: " << e.what() << '\n';
    return kDegenerate;
  }
  warn_near_null(cfg, best, err);

  const ClosedFormCandidate seed = closed_form_candidate(c);
  std::optional<double> seed_fidelity;
  try {
    seed_fidelity = evaluate(*cfg.noise, c, seed.measurement, cfg.input).fidelity;
  } catch (const NullProbability&) {
  }

  line(out, "theta_star", fixed12(best.theta_star));
  line(out, "phi_star", fixed12(best.phi_star));
  line(out, "f_star", fixed12(best.f_star));
  line(out, "p_star", fixed12(best.p_star));
  line(out, "grid_points", std::to_string(best.grid_points));
  line(out, "refinement_iterations", std::to_string(best.refinement_iterations));
  line(out, "closed_form_theta", fixed12(seed.measurement.theta()));
  line(out, "closed_form_phi", fixed12(seed.measurement.phi()));
  line(out, "closed_form_fidelity", seed_fidelity ? fixed12(*seed_fidelity) : "null");
  if (seed.degenerate) line(out, "closed_form_degenerate", "true");

  if (cfg.out_path) {
    write_output(*cfg.out_path,
                 render_record(cfg, {"theta", "phi", "fidelity"},
                               {{best.theta_star, best.phi_star, best.f_star},
                                {seed.measurement.theta(), seed.measurement.phi(), seed_fidelity}},
                               {"optimum", "closed_form"}),
                 out);
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SweepOptions opts;
  opts.threads = default_thread_count();
  opts.optimizer.grid_density = cfg.grid_density;
  const SweepMeta meta = provenance(cfg);

  std::vector<SweepGrid> grids;
  try {
    if (cfg.sweep_kind == "contour") {
      grids.push_back(contour_theta_phi(*cfg.noise, ControlSpec(*cfg.q0), cfg.input, cfg.resolution, opts));
    } else if (cfg.sweep_kind == "theta-curve") {
      grids.push_back(optimal_theta_curve(*cfg.noise, cfg.input, cfg.q0_samples, opts));
    } else {
      SurfacePair pair = surface_p_q0(cfg.input, cfg.p_samples, cfg.q0_samples, opts);
      grids.push_back(std::move(pair.f_star));
      grids.push_back(std::move(pair.theta_star));
    }
  } catch (const AllPointsNull& e) {
    err << "degenerate scenario: " << e.what() << '\n';
    return kDegenerate;
  }

  const std::string content = cfg.format == "json" ? to_json(grids, meta) : to_csv(grids, meta);

  const SweepGrid& g = grids.front();
  std::size_t best = g.values.size();
  std::size_t nulls = 0;
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (!g.values[i]) {
      ++nulls;
      continue;
    }
    lo = std::min(lo, *g.values[i]);
    if (best == g.values.size() || *g.values[i] > *g.values[best] + 1e-12) best = i;
  }
  line(out, "rows", std::to_string(g.cell_count()));
  line(out, "null_cells", std::to_string(nulls));
  if (best < g.values.size()) {
    line(out, "min_" + g.value_name, fixed12(lo));
    line(out, "max_" + g.value_name, fixed12(*g.values[best]));
    const auto at = g.coordinates(best);
    for (std::size_t k = 0; k < at.size(); ++k) line(out, "argmax_" + g.axes[k].name, fixed12(at[k]));
  }
  write_output(output_path(cfg, cfg.sweep_kind), content, out);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  constexpr double kEquivalenceTol = 1e-10;
  constexpr double kTraceTol = 1e-12;
  std::mt19937_64 rng(cfg.seed);
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto random_noise = [&] {
    double e[4];
    double sum = 0.0;
    for (double& x : e) sum += (x = std::exponential_distribution<double>(1.0)(rng));
    const double p1 = e[1] / sum, p2 = e[2] / sum, p3 = e[3] / sum;
    return NoiseSpec(std::max(0.0, 1.0 - p1 - p2 - p3), p1, p2, p3);
  };
  auto random_input = [&] { return PureQubit(std::acos(uniform(-1.0, 1.0)), uniform(-pi, pi)); };
  auto random_measurement = [&] { return MeasurementSpec(uniform(0.0, pi), uniform(-pi, pi)); };

  bool all_pass = true;
  auto verdict = [&](const std::string& name, bool pass, const std::string& detail) {
    all_pass = all_pass && pass;
    out << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
  };
  auto sci = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return std::string(buf);
  };

  line(out, "seed", std::to_string(cfg.seed));
  line(out, "draws", std::to_string(cfg.draws));

  // Closed form against the brute-force switch.
  Deviation f_un, prob, fid, branch;
  std::size_t null_draws = 0;
  bool null_mismatch = false;
  for (std::size_t i = 0; i < cfg.draws; ++i) {
    const NoiseSpec n = random_noise();
    const ControlSpec c(uniform(0.0, 1.0));
    const MeasurementSpec m = random_measurement();
    const PureQubit s = random_input();
    const CMatrix kept = oracle::post_selected_state(n, c, measurement_ket(m), s);
    const CMatrix other = oracle::post_selected_state(n, c, measurement_ket_orthogonal(m), s);
    branch.observe(std::real(trace(kept)) + std::real(trace(other)) - 1.0);

    const TeleportResult brute = oracle::measure(kept, input_density(s));
    const TeleportResult closed = combine(trace_sums(n, input_density(s)), switch_weights(c, m));
    f_un.observe(closed.f_un - brute.f_un);
    prob.observe(closed.prob - brute.prob);
    const bool closed_null = closed.prob < kNullProbability;
    const bool brute_null = brute.prob < kNullProbability;
    if (closed_null || brute_null) {
      ++null_draws;
      null_mismatch = null_mismatch || closed_null != brute_null;
      continue;
    }
    const TeleportResult direct = evaluate(n, c, m, s);
    fid.observe(direct.fidelity - brute.fidelity);
    f_un.observe(direct.f_un - brute.f_un);
    prob.observe(direct.prob - brute.prob);
  }
  verdict("equivalence.f_un", f_un.worst < kEquivalenceTol, "max deviation " + sci(f_un.worst));
  verdict("equivalence.prob", prob.worst < kEquivalenceTol, "max deviation " + sci(prob.worst));
  verdict("equivalence.fidelity", fid.worst < kEquivalenceTol && !null_mismatch,
          "max deviation " + sci(fid.worst) + ", null draws " + std::to_string(null_draws));
  verdict("branch_completeness", branch.worst < kEquivalenceTol, "max deviation " + sci(branch.worst));

  // Trace identities, measured over random pure inputs.
  constexpr std::size_t kTraceInputs = 50;
  Deviation reversed;
  double same_table[4][4] = {};
  Deviation same_spread;
  for (std::size_t k = 0; k < kTraceInputs; ++k) {
    const CMatrix rho = input_density(random_input());
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        reversed.observe(std::abs(trace_reversed_order(i, j, rho) - 1.0));
        const Complex same = trace_same_order(i, j, rho);
        if (k == 0) same_table[i][j] = std::real(same);
        same_spread.observe(std::abs(same - Complex(same_table[i][j])));
      }
    }
  }
  verdict("trace_reversed_order_is_one", reversed.worst < kTraceTol, "max deviation " + sci(reversed.worst));
  verdict("trace_same_order_is_input_independent", same_spread.worst < kTraceTol,
          "max spread " + sci(same_spread.worst));
  out << "trace_same_order_table (rows i, columns j)\n";
  for (const auto& row : same_table) {
    for (std::size_t j = 0; j < 4; ++j) out << (j ? " " : "  ") << (row[j] >= 0 ? "+" : "") << std::lround(row[j]);
    out << '\n';
  }

  // Basis-state control: the cross term vanishes and the switch is a definite order.
  Deviation degenerate;
  bool cross_zero = true;
  const std::size_t degenerate_draws = std::max<std::size_t>(1, cfg.draws / 10);
  for (double q0 : {0.0, 1.0}) {
    for (std::size_t i = 0; i < degenerate_draws; ++i) {
      const NoiseSpec n = random_noise();
      const MeasurementSpec m = random_measurement();
      const PureQubit s = random_input();
      const SwitchWeights w = switch_weights(ControlSpec(q0), m);
      cross_zero = cross_zero && w.cross == 0.0;
      degenerate.observe(max_abs_diff(oracle::post_selected_state(n, ControlSpec(q0), measurement_ket(m), s),
                                      unnormalized_output(n, w, input_density(s))));
    }
  }
  verdict("degenerate_control", cross_zero && degenerate.worst < kTraceTol,
          "max deviation " + sci(degenerate.worst));

  // Conjugate-phase partner audit; informational.
  double overlap = 0.0;
  for (std::size_t i = 0; i < std::max<std::size_t>(1, cfg.draws / 10); ++i) {
    const MeasurementSpec m = random_measurement();
    overlap = std::max(overlap, std::abs(inner(measurement_ket(m), measurement_ket_orthogonal_conjugate_phase(m))));
  }
  line(out, "info conjugate_phase_partner_max_overlap", sci(overlap));

  const double worst = std::max({f_un.worst, prob.worst, fid.worst, branch.worst});
  line(out, "max_deviation", sci(worst));
  line(out, "result", all_pass ? "pass" : "fail");
  return all_pass ? kOk : kVerificationFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Teleportation through two noisy channels in a superposition of causal orders.\n"
      "Angles are in radians; probabilities are decimals. CST_THREADS caps sweep parallelism.",
      "cst"};
  app.set_version_flag("--version", std::string(kVersion));

  std::optional<double> p_iso, p0, p1, p2, p3, q0, theta, phi;
  double theta0 = pi / 3.0;
  double phi0 = pi / 4.0;
  std::optional<std::string> out_path;
  std::string format = "csv";
  std::uint64_t seed = 42;
  std::size_t grid_density = 65;

  auto* opt_p = app.add_option("--p", p_iso, "Isotropic noise: p1 = p2 = p3 = p, p0 = 1 - 3p");
  CLI::Option* explicit_p[4] = {
      app.add_option("--p0", p0, "Identity weight of the channel"),
      app.add_option("--p1", p1, "X weight of the channel"),
      app.add_option("--p2", p2, "Y weight of the channel"),
      app.add_option("--p3", p3, "Z weight of the channel"),
  };
  for (auto* o : explicit_p) opt_p->excludes(o);
  app.add_option("--q0", q0, "Control weight of the |0> ordering");
  auto* opt_theta = app.add_option("--theta", theta, "Measurement polar angle");
  auto* opt_phi = app.add_option("--phi", phi, "Measurement azimuth");
  app.add_option("--theta0", theta0, "Input polar angle")->capture_default_str();
  app.add_option("--phi0", phi0, "Input azimuth")->capture_default_str();
  app.add_option("--out", out_path, "Output file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--seed", seed, "Seed for random draws")->capture_default_str();
  app.add_option("--grid", grid_density, "Optimizer grid points on theta (>= 32)")->capture_default_str();

  auto* fidelity_cmd = app.add_subcommand("fidelity", "Evaluate one measurement (default when --theta is given)");
  auto* optimize_cmd = app.add_subcommand("optimize", "Find the measurement maximizing fidelity");
  auto* sweep_cmd = app.add_subcommand("sweep", "Write figure data: contour | theta-curve | surface");
  auto* verify_cmd = app.add_subcommand("verify", "Closed form against brute-force switch simulation");

  std::string kind;
  std::size_t resolution = 181;
  std::vector<double> q0_samples;
  std::vector<double> p_samples;
  sweep_cmd->add_option("kind", kind, "contour | theta-curve | surface")
      ->required()
      ->check(CLI::IsMember({"contour", "theta-curve", "surface"}));
  sweep_cmd->add_option("--resolution", resolution, "Contour theta samples (>= 32)")->capture_default_str();
  sweep_cmd->add_option("--q0-samples", q0_samples, "Comma-separated q0 values in (0, 1)")->delimiter(',');
  sweep_cmd->add_option("--p-samples", p_samples, "Comma-separated isotropic p values in [0, 1/3]")->delimiter(',');

  std::size_t draws = 1000;
  verify_cmd->add_option("--draws", draws, "Random scenarios to compare")->capture_default_str();

  for (auto* sub : {fidelity_cmd, optimize_cmd, sweep_cmd, verify_cmd}) sub->fallthrough();
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto usage = [&](const std::string& message) {
    err << "usage error: " << message << "\nRun with --help for more information.\n";
    return kUsage;
  };

  RunConfig cfg;
  if (optimize_cmd->parsed()) {
    cfg.command = "optimize";
  } else if (sweep_cmd->parsed()) {
    cfg.command = "sweep";
  } else if (verify_cmd->parsed()) {
    cfg.command = "verify";
  } else if (fidelity_cmd->parsed() || theta) {
    cfg.command = "fidelity";
  } else {
    return usage("nothing to do: give --theta/--phi or a subcommand");
  }

  try {
    const bool any_explicit = p0 || p1 || p2 || p3;
    if (any_explicit && !(p0 && p1 && p2 && p3)) return usage("--p0, --p1, --p2 and --p3 must be given together");
    if (p_iso) cfg.noise = NoiseSpec::from_p(*p_iso);
    if (any_explicit) cfg.noise = NoiseSpec(*p0, *p1, *p2, *p3);
    if (q0) {
      ControlSpec validated(*q0);
      cfg.q0 = validated.q0();
    }
    cfg.input = PureQubit(theta0, phi0);
    cfg.out_path = out_path;
    cfg.format = format;
    cfg.seed = seed;
    cfg.grid_density = grid_density;
    if (grid_density < 32) return usage("--grid must be at least 32");

    const bool explicit_measurement = opt_theta->count() > 0 || opt_phi->count() > 0;
    if (cfg.command == "fidelity") {
      if (!theta) return usage("fidelity needs --theta (and optionally --phi)");
      cfg.measurement = MeasurementSpec(*theta, phi.value_or(0.0));
    } else if (explicit_measurement) {
      return usage("--theta/--phi select a single measurement; they cannot be combined with " + cfg.command);
    }

    const bool needs_noise = cfg.command == "fidelity" || cfg.command == "optimize" ||
                             (cfg.command == "sweep" && kind != "surface");
    const bool needs_control = cfg.command == "fidelity" || cfg.command == "optimize" ||
                               (cfg.command == "sweep" && kind == "contour");
    if (needs_noise && !cfg.noise) return usage(cfg.command + " needs --p or --p0..--p3");
    if (needs_control && !cfg.q0) return usage(cfg.command + " needs --q0");

    if (cfg.command == "sweep") {
      cfg.sweep_kind = kind;
      cfg.resolution = resolution;
      if (kind == "contour" && resolution < 32) return usage("--resolution must be at least 32");
      if (kind != "contour") {
        cfg.q0_samples = q0_samples.empty() ? default_q0_samples() : q0_samples;
        for (std::size_t i = 0; i < cfg.q0_samples.size(); ++i) {
          if (!(cfg.q0_samples[i] > 0.0 && cfg.q0_samples[i] < 1.0)) return usage("q0 samples must lie in (0, 1)");
          if (i > 0 && !(cfg.q0_samples[i] > cfg.q0_samples[i - 1])) {
            return usage("q0 samples must be strictly increasing");
          }
        }
      }
      if (kind == "surface") {
        cfg.p_samples = p_samples.empty() ? default_p_samples() : p_samples;
        for (std::size_t i = 0; i < cfg.p_samples.size(); ++i) {
          if (!(cfg.p_samples[i] >= 0.0 && cfg.p_samples[i] <= 1.0 / 3.0 + 1e-12)) {
            return usage("p samples must lie in [0, 1/3]");
          }
          if (i > 0 && !(cfg.p_samples[i] > cfg.p_samples[i - 1])) return usage("p samples must be strictly increasing");
        }
      }
    }
    if (cfg.command == "verify") {
      if (draws < 1) return usage("--draws must be at least 1");
      cfg.draws = draws;
    }
  } catch (const InvalidArgument& e) {
    return usage(e.what());
  }

  try {
    if (cfg.command == "fidelity") return cmd_fidelity(cfg, out, err);
    if (cfg.command == "optimize") return cmd_optimize(cfg, out, err);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const InvalidArgument& e) {
    return usage(e.what());
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace cst::cli

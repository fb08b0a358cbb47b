// Copyright 2026 The graphent Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphent/census.hpp"
#include "graphent/ergm.hpp"
#include "graphent/error.hpp"
#include "graphent/graphon_io.hpp"
#include "graphent/optimizer.hpp"
#include "graphent/parallel.hpp"
#include "graphent/phase_analysis.hpp"
#include "graphent/region.hpp"
#include "graphent/report_json.hpp"
#include "graphent/svg.hpp"
#include "verify_suite.hpp"

namespace graphent::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::uint64_t seed = 0;
  std::string threads = "1";
  std::string out_path;
  std::string format = "json";
  std::string config_path;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  OptimConfig config;
  std::string format;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvariantViolation: return kExitInvariantViolation;
    case ErrorCode::kEdgeDensityMismatch: return kExitInvariantViolation;
    default: return kExitInvalidArguments;
  }
}

int parse_threads(const std::string& text) {
  if (text == "auto") return 0;
  try {
    std::size_t used = 0;
    const int n = std::stoi(text, &used);
    if (used == text.size() && n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument, "--threads must be a positive integer or 'auto'");
}

Motif parse_motif(const std::string& text) {
  if (text == "edge" || text == "triangle" || text.rfind("star:", 0) == 0) return Motif::from_shorthand(text);
  return load_motif(text);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParseError, "'" + path + "': " + ex.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  file << text;
}

std::string real(double x) { return format_real(x); }

void emit_json(Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

int status_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::kConverged: return kExitSuccess;
    case SolveStatus::kNotConverged: return kExitNotConverged;
    case SolveStatus::kInfeasible: return kExitInfeasible;
  }
  return kExitSuccess;
}

// --- subcommands -----------------------------------------------------------

struct EntropyArgs {
  double e = 0.0;
  double t = 0.0;
  std::string motif = "triangle";
  std::optional<int> m;
};

int cmd_entropy(Context& ctx, const EntropyArgs& a) {
  OptimConfig config = ctx.config;
  if (a.m) config.m = *a.m;
  config.validate();
  const Motif motif = parse_motif(a.motif);
  const EntropyResult r = maximize_entropy({a.e, a.t}, motif, config);
  if (ctx.format == "csv") {
    ctx.out << "e,t,status,s,beta1,beta2,converged,el_residual,constraint_violation,kkt_norm\n"
            << real(a.e) << ',' << real(a.t) << ',' << to_string(r.status) << ',' << real(r.s_value) << ','
            << real(r.beta1) << ',' << real(r.beta2) << ',' << (r.converged ? "true" : "false") << ','
            << real(r.el_residual_norm) << ',' << real(r.constraint_violation) << ',' << real(r.kkt_norm)
            << '\n';
  } else {
    json j = to_json(r);
    j["motif"] = to_json(motif);
    emit_json(ctx, j);
  }
  if (r.status != SolveStatus::kConverged) {
    ctx.err << "entropy: " << to_string(r.status) << " (violation " << real(r.constraint_violation) << ", kkt "
            << real(r.kkt_norm) << ")\n";
  }
  return status_exit(r.status);
}

int cmd_scan(Context& ctx, const std::string& spec_path, const std::string& svg_path) {
  json j = load_json(spec_path);
  ScanSpec spec = scan_spec_from_json(j);
  if (j.contains("config")) {
    // Flags and the --config file set threads and seed; the spec refines the rest.
    spec.config.threads = ctx.config.threads;
  } else {
    spec.config = ctx.config;
  }
  const ScanTable table = phase_diagram_scan(spec);
  if (ctx.format == "json") {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"e", r.e},
                      {"t", r.t},
                      {"status", r.status},
                      {"s", json_real(r.s_value)},
                      {"beta1", json_real(r.beta1)},
                      {"beta2", json_real(r.beta2)},
                      {"converged", r.converged},
                      {"el_residual", json_real(r.el_residual)},
                      {"constraint_violation", json_real(r.constraint_violation)}});
    }
    json ridge = json::array();
    for (const auto& c : ridge_check(table)) {
      ridge.push_back({{"e", c.e}, {"t_curve", c.t_curve}, {"argmax_t", c.argmax_t}, {"holds", c.holds}});
    }
    emit_json(ctx, {{"spec", to_json(spec)}, {"rows", rows}, {"ridge", ridge}});
  } else {
    write_scan_csv(ctx.out, table);
  }
  if (!svg_path.empty()) write_text_file(svg_path, render_scan_heatmap(table));
  return kExitSuccess;
}

int cmd_crease(Context& ctx, const std::vector<double>& es, const std::string& motif_text,
               const std::vector<double>& offsets, std::optional<int> m) {
  OptimConfig config = ctx.config;
  if (m) config.m = *m;
  config.validate();
  const Motif motif = parse_motif(motif_text);
  const CreaseReport report = crease_report(es, motif, config, offsets.empty() ? default_crease_offsets() : offsets);
  if (ctx.format == "csv") {
    ctx.out << "e,left_derivative,left_se,right_derivative,right_se,exponent,exponent_se,constant,bounds_hold,verdict\n";
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
      const auto& v = report.verdicts[i];
      const auto& fit = report.scans[i].left_exponent_fit;
      ctx.out << real(v.e) << ',' << real(v.left_derivative) << ',' << real(v.left_se) << ','
              << real(v.right_derivative) << ',' << real(v.right_se) << ',' << real(fit.exponent) << ','
              << real(fit.exponent_se) << ',' << real(fit.constant) << ',' << (v.bounds_hold ? "true" : "false")
              << ',' << v.verdict << '\n';
    }
    return kExitSuccess;
  }
  json slices = json::array();
  for (std::size_t i = 0; i < report.scans.size(); ++i) {
    const auto& v = report.verdicts[i];
    json slice = to_json(report.scans[i]);
    slice["verdict"] = {{"left_derivative", json_real(v.left_derivative)},
                        {"left_se", json_real(v.left_se)},
                        {"right_derivative", json_real(v.right_derivative)},
                        {"right_se", json_real(v.right_se)},
                        {"left_points", v.left_points},
                        {"right_points", v.right_points},
                        {"bounds_hold", v.bounds_hold},
                        {"verdict", v.verdict}};
    slices.push_back(slice);
  }
  emit_json(ctx, {{"motif", to_json(motif)}, {"all_detected", report.all_detected}, {"slices", slices}});
  return kExitSuccess;
}

int cmd_region(Context& ctx, int samples, const std::string& svg_path) {
  if (samples < 2) throw Error(ErrorCode::kInvalidArgument, "--samples must be >= 2");
  if (ctx.format == "json") {
    json rows = json::array();
    for (int i = 0; i < samples; ++i) {
      const double e = static_cast<double>(i) / (samples - 1);
      rows.push_back({{"e", e},
                      {"upper", region::upper_boundary(e)},
                      {"envelope", region::lower_envelope(e)},
                      {"er", region::er_curve(e)}});
    }
    emit_json(ctx, rows);
  } else {
    ctx.out << "e,upper,envelope,er\n";
    for (int i = 0; i < samples; ++i) {
      const double e = static_cast<double>(i) / (samples - 1);
      ctx.out << real(e) << ',' << real(region::upper_boundary(e)) << ',' << real(region::lower_envelope(e)) << ','
              << real(region::er_curve(e)) << '\n';
    }
  }
  if (!svg_path.empty()) write_text_file(svg_path, render_region(samples));
  return kExitSuccess;
}

struct ErgmArgs {
  bool grid = false;
  bool curve = false;
  bool verify_thm5 = false;
  bool convexity = false;
  double beta_min = -3.0;
  double beta_max = 3.0;
  int per_axis = 7;
  double beta2_min = 0.6;
  double beta2_max = 3.0;
  int steps = 25;
  std::string svg;
};

int cmd_ergm(Context& ctx, const ErgmArgs& a) {
  const int modes = a.grid + a.curve + a.verify_thm5 + a.convexity;
  if (modes != 1) {
    throw Error(ErrorCode::kInvalidArgument, "ergm needs exactly one of --grid, --curve, --verify-thm5, --convexity");
  }
  if (a.curve) {
    const TransitionCurve curve = transition_curve(a.beta2_min, a.beta2_max, a.steps);
    if (ctx.format == "csv") {
      ctx.out << "beta2,beta1_critical,u_low,u_high,psi_gap\n";
      for (const auto& p : curve.points) {
        ctx.out << real(p.beta2) << ',' << real(p.beta1_critical) << ',' << real(p.u_low) << ',' << real(p.u_high)
                << ',' << real(p.psi_gap) << '\n';
      }
    } else {
      emit_json(ctx, to_json(curve));
    }
    if (!a.svg.empty()) write_text_file(a.svg, render_transition_curve(curve));
    return kExitSuccess;
  }
  if (a.convexity) {
    emit_json(ctx, to_json(convexity_report(1000)));
    return kExitSuccess;
  }
  const auto grid = square_grid(a.beta_min, a.beta_max, a.per_axis);
  if (a.verify_thm5) {
    const ThmFiveReport report = verify_t_le_e_cubed(grid, ctx.config);
    emit_json(ctx, to_json(report));
    if (report.violations > 0) {
      ctx.err << "ergm: " << report.violations << " grid points with t > e^3\n";
      return kExitInvariantViolation;
    }
    return kExitSuccess;
  }
  OptimConfig inner = ctx.config;
  inner.threads = 1;
  std::vector<std::optional<FreeEnergyResult>> results(grid.size());
  parallel_for(grid.size(), ctx.config.threads, [&](std::size_t i) { results[i] = psi_full(grid[i], inner); });
  if (ctx.format == "csv") {
    ctx.out << "beta1,beta2,psi,psi_er,e,t,degenerate,converged\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& r = *results[i];
      ctx.out << real(grid[i].beta1) << ',' << real(grid[i].beta2) << ',' << real(r.psi) << ','
              << real(psi_constant(grid[i]).psi_er) << ',' << real(r.maximizer_densities.e) << ','
              << real(r.maximizer_densities.t) << ',' << (r.degenerate ? "true" : "false") << ','
              << (r.converged ? "true" : "false") << '\n';
    }
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      json row = to_json(*results[i]);
      row["beta1"] = grid[i].beta1;
      row["beta2"] = grid[i].beta2;
      row["psi_er"] = json_real(psi_constant(grid[i]).psi_er);
      rows.push_back(row);
    }
    emit_json(ctx, rows);
  }
  return kExitSuccess;
}

int cmd_census(Context& ctx, int n, bool allow_n8) {
  std::function<void(int, int)> progress;
  if (n >= 8) {
    progress = [&](int done, int total) { ctx.err << "census: chunk " << done << "/" << total << '\n'; };
  }
  const CensusTable table = enumerate_census(n, allow_n8, ctx.config.threads, progress);
  write_census_csv(ctx.out, table);
  return kExitSuccess;
}

std::vector<DensityPair> read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "e,t") throw Error(ErrorCode::kParseError, "points CSV must start with 'e,t'");
  std::vector<DensityPair> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    DensityPair p;
    char comma = 0;
    if (!(fields >> p.e >> comma >> p.t) || comma != ',') {
      throw Error(ErrorCode::kParseError, "bad points row '" + line + "'");
    }
    points.push_back(p);
  }
  return points;
}

int cmd_census_compare(Context& ctx, int n, double alpha, const std::string& points_path,
                       const std::string& census_path) {
  CensusTable table;
  if (!census_path.empty()) {
    std::ifstream in(census_path);
    if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + census_path + "'");
    table = read_census_csv(in);
  } else {
    table = enumerate_census(n, false, ctx.config.threads);
  }
  const std::vector<DensityPair> points = points_path.empty() ? std::vector<DensityPair>{} : read_points_csv(points_path);
  const Motif triangle = Motif::triangle();
  const CensusComparison cmp = compare_to_variational(table, points, alpha, [&](const DensityPair& p) {
    const EntropyResult r = maximize_entropy(p, triangle, ctx.config);
    return r.status == SolveStatus::kInfeasible ? std::nan("") : r.s_value;
  });
  emit_json(ctx, to_json(cmp));
  return kExitSuccess;
}

int cmd_verify(Context& ctx) {
  const auto results = run_verify_suite(ctx.config.seed, ctx.config.threads);
  bool all = true;
  for (const auto& r : results) {
    ctx.out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? kExitSuccess : kExitInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphon entropy s(e, t): optimizer, crease analysis, ERGM free energy, census oracle", "graphent"};
  app.require_subcommand(1);
  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Random seed");
  auto* threads_opt = app.add_option("--threads", g.threads, "Worker threads (integer or 'auto')");
  app.add_option("--out", g.out_path, "Write machine output to this file");
  auto* format_opt =
      app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", g.config_path, "JSON configuration file (\"version\": 1)");

  EntropyArgs entropy;
  auto* entropy_cmd = app.add_subcommand("entropy", "Maximize -I(g) at one (e, t)");
  entropy_cmd->add_option("--e", entropy.e)->required();
  entropy_cmd->add_option("--t", entropy.t)->required();
  entropy_cmd->add_option("--motif", entropy.motif, "triangle, edge, star:k, or a motif file");
  auto* m_opt = entropy_cmd->add_option("--m", "Grid resolution");

  std::string spec_path, scan_svg;
  auto* scan_cmd = app.add_subcommand("scan", "Phase-diagram scan from a JSON spec");
  scan_cmd->add_option("--spec", spec_path)->required();
  scan_cmd->add_option("--svg", scan_svg, "Also write a heatmap SVG");

  std::vector<double> crease_e, crease_offsets;
  std::string crease_motif = "triangle";
  auto* crease_cmd = app.add_subcommand("crease", "One-sided slopes across t = e^k");
  crease_cmd->add_option("--e", crease_e)->required()->delimiter(',');
  crease_cmd->add_option("--motif", crease_motif);
  crease_cmd->add_option("--offsets", crease_offsets)->delimiter(',');
  auto* crease_m_opt = crease_cmd->add_option("--m", "Grid resolution");

  int region_samples = 101;
  std::string region_svg;
  auto* region_cmd = app.add_subcommand("region", "Boundary curves of the triangle region");
  region_cmd->add_option("--samples", region_samples);
  region_cmd->add_option("--svg", region_svg);

  ErgmArgs ergm;
  auto* ergm_cmd = app.add_subcommand("ergm", "Edge/triangle ERGM free energy");
  ergm_cmd->add_flag("--grid", ergm.grid, "psi on a square (beta1, beta2) grid");
  ergm_cmd->add_flag("--curve", ergm.curve, "Transition curve in the beta plane");
  ergm_cmd->add_flag("--verify-thm5", ergm.verify_thm5, "Check t <= e^3 for the maximizers on the grid");
  ergm_cmd->add_flag("--convexity", ergm.convexity, "Convexity change of s(1/2, t)");
  ergm_cmd->add_option("--beta-min", ergm.beta_min);
  ergm_cmd->add_option("--beta-max", ergm.beta_max);
  ergm_cmd->add_option("--per-axis", ergm.per_axis);
  ergm_cmd->add_option("--beta2-min", ergm.beta2_min);
  ergm_cmd->add_option("--beta2-max", ergm.beta2_max);
  ergm_cmd->add_option("--steps", ergm.steps);
  ergm_cmd->add_option("--svg", ergm.svg);

  int census_n = 0;
  bool allow_n8 = false;
  auto* census_cmd = app.add_subcommand("census", "Exact labeled-graph census as CSV");
  census_cmd->add_option("--n", census_n)->required();
  census_cmd->add_flag("--allow-n8", allow_n8, "Permit n = 8 (2^28 graphs)");

  int compare_n = 7;
  double compare_alpha = 0.05;
  std::string compare_points, compare_census;
  auto* compare_cmd = app.add_subcommand("census-compare", "Census entropy against the variational value");
  compare_cmd->add_option("--n", compare_n);
  compare_cmd->add_option("--alpha", compare_alpha);
  compare_cmd->add_option("--points", compare_points, "CSV with header e,t");
  compare_cmd->add_option("--census", compare_census, "Reuse a census CSV instead of enumerating");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& ex) {
    err << "graphent: " << ex.what() << '\n';
    return kExitInvalidArguments;
  }

  try {
    OptimConfig config;
    std::string format = "json";
    if (!g.config_path.empty()) {
      const json file = load_json(g.config_path);
      if (file.value("version", 0) != 1) throw Error(ErrorCode::kInvalidArgument, "config file needs \"version\": 1");
      for (const auto& [key, value] : file.items()) {
        if (key != "version" && key != "optim" && key != "seed" && key != "threads" && key != "format") {
          throw Error(ErrorCode::kInvalidArgument, "unknown config file key '" + key + "'");
        }
      }
      if (file.contains("optim")) config = optim_config_from_json(file.at("optim"), config);
      if (file.contains("seed")) config.seed = file.at("seed").get<std::uint64_t>();
      if (file.contains("threads")) {
        const json& t = file.at("threads");
        config.threads = parse_threads(t.is_string() ? t.get<std::string>() : std::to_string(t.get<int>()));
      }
      if (file.contains("format")) format = file.at("format").get<std::string>();
    }
    if (seed_opt->count()) config.seed = g.seed;
    if (threads_opt->count()) config.threads = parse_threads(g.threads);
    if (format_opt->count()) format = g.format;
    if (format != "csv" && format != "json") throw Error(ErrorCode::kInvalidArgument, "format must be csv or json");

    std::ofstream file_out;
    if (!g.out_path.empty()) {
      file_out.open(g.out_path, std::ios::binary);
      if (!file_out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + g.out_path + "'");
    }
    Context ctx{g.out_path.empty() ? out : file_out, err, config, format};

    auto optional_int = [](CLI::Option* opt) -> std::optional<int> {
      if (!opt->count()) return std::nullopt;
      return opt->as<int>();
    };
    if (entropy_cmd->parsed()) {
      entropy.m = optional_int(m_opt);
      return cmd_entropy(ctx, entropy);
    }
    if (scan_cmd->parsed()) return cmd_scan(ctx, spec_path, scan_svg);
    if (crease_cmd->parsed()) return cmd_crease(ctx, crease_e, crease_motif, crease_offsets, optional_int(crease_m_opt));
    if (region_cmd->parsed()) return cmd_region(ctx, region_samples, region_svg);
    if (ergm_cmd->parsed()) return cmd_ergm(ctx, ergm);
    if (census_cmd->parsed()) {
      if (format_opt->count() && format == "json") throw Error(ErrorCode::kInvalidArgument, "census writes CSV only");
      return cmd_census(ctx, census_n, allow_n8);
    }
    if (compare_cmd->parsed()) return cmd_census_compare(ctx, compare_n, compare_alpha, compare_points, compare_census);
    if (verify_cmd->parsed()) return cmd_verify(ctx);
  } catch (const Error& ex) {
    err << "graphent: " << ex.what() << '\n';
    return exit_code_for(ex.code());
  } catch (const std::exception& ex) {
    err << "graphent: internal error: " << ex.what() << '\n';
    return kExitInvariantViolation;
  }
  return kExitInvalidArguments;
}

}  // namespace graphent::cli

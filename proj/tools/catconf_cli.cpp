// Command-line entry point: rank / count / verify / formulas.
// Exit codes: 0 success (count: stabilized), 2 checks failed or loop budget
// exhausted, 3 input error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "catconf/catalecticant.hpp"
#include "catconf/formulas.hpp"
#include "catconf/io.hpp"
#include "catconf/monodromy.hpp"
#include "catconf/systems.hpp"
#include "catconf/types.hpp"

namespace {

using namespace catconf;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 2;
constexpr int kExitInputError = 3;

std::string echo_command(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

Json run_report(const std::string& command, const std::string& preset, std::uint64_t seed,
                Json config, Json result, double wall_ms) {
  return Json{{"command", command}, {"preset", preset},   {"seed", seed},
              {"config", config},   {"result", result},   {"wall_ms", wall_ms},
              {"version", kVersion}};
}

void emit(const Json& report, const std::string& human, bool as_json,
          const std::string& out_path) {
  if (!out_path.empty()) write_text_file(out_path, report.dump(2) + "\n");
  if (as_json)
    std::cout << report.dump() << "\n";
  else
    std::cout << human << "\n";
}

int cmd_rank(const std::string& command, const std::string& preset, const std::string& input,
             int order, double tol, std::uint64_t seed, bool as_json,
             const std::string& out_path) {
  const auto t0 = Clock::now();
  RankReport rep;
  if (!preset.empty()) {
    rep = rank_preset_report(preset, seed, tol);
  } else {
    const PolyVector f = polyvector_from_json(Json::parse(read_text_file(input)));
    if (order <= 0)
      throw std::invalid_argument("rank --input requires a positive --order");
    const auto degs = f.degrees();
    const bool uniform = std::all_of(degs.begin(), degs.end(),
                                     [&](int d) { return d == degs.front(); });
    const CMat m = uniform ? build_catalecticant(f, order) : build_catalecticant_mixed(f, order);
    rep = rank_report(m, tol);
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  double max_membership = 0.0;
  for (const double m : rep.memberships) max_membership = std::max(max_membership, m);
  std::string human = "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.rows) +
                      "x" + std::to_string(rep.cols) + " (gap " + std::to_string(rep.gap) + ")";
  if (!rep.memberships.empty())
    human += ", max membership residual " + std::to_string(max_membership);

  const Json config{{"tol", tol}, {"order", order}};
  emit(run_report(command, preset.empty() ? input : preset, seed, config, to_json(rep), wall_ms),
       human, as_json, out_path);
  return kExitOk;
}

struct CountFlags {
  std::string preset;
  std::uint64_t seed = 1;
  int stable_loops = 8;
  int max_loops = 100;
  int threads = 0;  // 0: one per hardware core
  bool use_paper_start = false;
  double corrector_tol = 1e-9;
  double step_min = 1e-7;
  int max_steps = 10000;
  std::string out_path;
  bool as_json = false;
};

int cmd_count(const std::string& command, const CountFlags& flags) {
  if (flags.use_paper_start && flags.preset != "quartics-reduced")
    throw std::invalid_argument("--use-paper-start is only valid for quartics-reduced");

  const auto sys = make_count_preset(flags.preset, flags.seed);

  StartPair start;
  if (flags.use_paper_start) {
    start = reduced_quartic_reference_pair();
  } else {
    Rng rng(flags.seed);
    start = sys->make_start(rng);
  }

  MonodromyConfig cfg;
  cfg.stable_loops = flags.stable_loops;
  cfg.max_loops = flags.max_loops;
  cfg.threads = flags.threads > 0
                    ? flags.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  cfg.tracker.corrector_tol = flags.corrector_tol;
  cfg.tracker.step_min = flags.step_min;
  cfg.tracker.max_steps = flags.max_steps;

  const auto t0 = Clock::now();
  const MonodromyState state = run_monodromy(*sys, start, cfg, flags.seed);
  const double wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  const SolutionSet set = make_solution_set(flags.preset, flags.seed, *sys, state);
  const std::string out_path =
      flags.out_path.empty()
          ? flags.preset + "-" + std::to_string(flags.seed) + ".solutions.json"
          : flags.out_path;
  write_text_file(out_path, to_json(set).dump(2) + "\n");

  bool start_contained = true;
  if (flags.use_paper_start) {
    start_contained = false;
    for (const auto& c : state.classes)
      if (classes_equivalent(*sys, start.x, c.x, 1e-6)) {
        start_contained = true;
        break;
      }
  }

  Json result{{"classes", state.classes.size()},
              {"stabilized", state.stabilized},
              {"loops_run", state.loops_run},
              {"quiet_loops", state.quiet_loops},
              {"paths_tracked", state.paths_tracked},
              {"path_failures", state.path_failures},
              {"filtered_endpoints", state.filtered_endpoints},
              {"solutions_file", out_path}};
  if (flags.use_paper_start) result["start_contained"] = start_contained;

  const Json config{{"stable_loops", cfg.stable_loops},
                    {"max_loops", cfg.max_loops},
                    {"threads", cfg.threads},
                    {"dedup_tol", cfg.dedup_tol},
                    {"full_residual_tol", cfg.full_residual_tol},
                    {"tracker",
                     Json{{"corrector_tol", cfg.tracker.corrector_tol},
                          {"step_min", cfg.tracker.step_min},
                          {"max_steps", cfg.tracker.max_steps}}}};

  std::string human = flags.preset + " seed " + std::to_string(flags.seed) + ": at least " +
                      std::to_string(state.classes.size());
  human += state.stabilized
               ? " (stabilized after " + std::to_string(state.quiet_loops) + " quiet loops)"
               : " (loop budget exhausted after " + std::to_string(state.loops_run) + " loops)";
  human += "; " + std::to_string(state.paths_tracked) + " paths, " +
           std::to_string(state.path_failures) + " failures -> " + out_path;
  if (flags.use_paper_start)
    human += start_contained ? "; reference start contained"
                             : "; reference start NOT FOUND among classes";

  emit(run_report(command, flags.preset, flags.seed, config, result, wall_ms), human,
       flags.as_json, "");

  if (!state.stabilized) return kExitChecksFailed;
  if (flags.use_paper_start && !start_contained) return kExitChecksFailed;
  return kExitOk;
}

// sigma_min/sigma_max after a few rounds of row/column norm equilibration.
// The raw ratio also measures how unevenly the coefficient basis scales the
// equations (multinomial weights, mixed derivative magnitudes); equilibration
// strips that so the ratio reflects actual proximity to a singular Jacobian.
double equilibrated_sigma_ratio(CMat J) {
  for (int pass = 0; pass < 3; ++pass) {
    for (Eigen::Index r = 0; r < J.rows(); ++r) {
      const double n = J.row(r).norm();
      if (n > 0.0) J.row(r) /= n;
    }
    for (Eigen::Index c = 0; c < J.cols(); ++c) {
      const double n = J.col(c).norm();
      if (n > 0.0) J.col(c) /= n;
    }
  }
  const Eigen::JacobiSVD<CMat> svd(J);
  const auto& sv = svd.singularValues();
  return sv[sv.size() - 1] / sv[0];
}

int cmd_verify(const std::string& command, const std::string& input, double residual_tol,
               double dedup_tol, double sigma_ratio_min, bool as_json,
               const std::string& out_path) {
  const auto t0 = Clock::now();
  const SolutionSet set = solution_set_from_json(Json::parse(read_text_file(input)));
  const auto sys = make_count_preset(set.preset, set.seed);

  double max_residual = 0.0;
  double min_sigma_ratio = 1.0;
  std::vector<CVec> xs;
  for (const auto& entry : set.classes) {
    const CVec x = x_from_summands(entry.summands);
    if (x.size() != sys->x_dim())
      throw std::invalid_argument("class size does not match preset " + set.preset);
    xs.push_back(x);
    max_residual = std::max(max_residual,
                            sys->full_residual(x, set.base_point).norm());
    min_sigma_ratio = std::min(min_sigma_ratio,
                               equilibrated_sigma_ratio(sys->jacobian(x, set.base_point)));
  }

  bool distinct = true;
  for (size_t i = 0; i < xs.size() && distinct; ++i)
    for (size_t j = i + 1; j < xs.size() && distinct; ++j)
      if (classes_equivalent(*sys, xs[i], xs[j], dedup_tol)) distinct = false;

  const bool residuals_ok = max_residual <= residual_tol;
  const bool regular = min_sigma_ratio >= sigma_ratio_min;
  const bool pass = residuals_ok && distinct && regular;
  const double wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  const Json result{{"classes", set.classes.size()}, {"max_residual", max_residual},
                    {"distinct", distinct},          {"min_sigma_ratio", min_sigma_ratio},
                    {"regular", regular},            {"pass", pass}};
  const Json config{{"residual_tol", residual_tol},
                    {"dedup_tol", dedup_tol},
                    {"sigma_ratio_min", sigma_ratio_min}};

  std::string human = "verify " + set.preset + " seed " + std::to_string(set.seed) + ": " +
                      std::to_string(set.classes.size()) + " classes, max residual " +
                      std::to_string(max_residual) + ", " +
                      (distinct ? "pairwise distinct" : "DUPLICATE CLASSES") + ", " +
                      (regular ? "regular" : "NEAR-SINGULAR JACOBIAN") + " -> " +
                      (pass ? "pass" : "FAIL");

  emit(run_report(command, set.preset, set.seed, config, result, wall_ms), human, as_json,
       out_path);
  return pass ? kExitOk : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivative-matrix ranks and decomposition counts for ternary forms"};
  app.require_subcommand(1);
  const std::string command = echo_command(argc, argv);

  // rank
  auto* rank = app.add_subcommand("rank", "Numerical rank and membership report");
  std::string rank_preset, rank_input, rank_out;
  int rank_order = 0;
  double rank_tol = 1e-8;
  std::uint64_t rank_seed = 1;
  bool rank_json = false;
  auto* preset_opt = rank->add_option("--preset", rank_preset,
                                      "One of: cubics333, quartics4444, sextic-rank9, octic-rank14");
  auto* input_opt = rank->add_option("--input", rank_input, "PolyVector JSON file");
  rank->add_option("--order", rank_order, "Derivative order (required with --input)");
  rank->add_option("--tol", rank_tol, "Relative singular value threshold");
  rank->add_option("--seed", rank_seed, "Instance seed for presets");
  rank->add_flag("--json", rank_json, "Emit the full JSON report on stdout");
  rank->add_option("--out", rank_out, "Also write the JSON report to this file");
  preset_opt->excludes(input_opt);

  // count
  auto* count = app.add_subcommand("count", "Collect decomposition classes by monodromy");
  CountFlags cf;
  count->add_option("--preset", cf.preset,
                    "One of: london, london-mixed, quartics-full, quartics-reduced, "
                    "sextic9, segre-slice-6, c2-slice-12")
      ->required();
  count->add_option("--seed", cf.seed, "Run seed (instance, start, and loops)");
  count->add_option("--stable-loops", cf.stable_loops, "Quiet loops required to stop");
  count->add_option("--max-loops", cf.max_loops, "Loop budget");
  count->add_option("--threads", cf.threads, "Path-tracking threads (default: cores)");
  count->add_flag("--use-paper-start", cf.use_paper_start,
                  "Start from the published reference solution (quartics-reduced only)");
  count->add_option("--corrector-tol", cf.corrector_tol, "Newton corrector tolerance");
  count->add_option("--step-min", cf.step_min, "Minimal predictor step");
  count->add_option("--max-steps", cf.max_steps, "Step-attempt budget per path");
  count->add_option("--out", cf.out_path, "Solution-set file (default <preset>-<seed>.solutions.json)");
  count->add_flag("--json", cf.as_json, "Emit the full JSON report on stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check a solution-set file");
  std::string verify_input, verify_out;
  double verify_tol = 1e-8, verify_dedup = 1e-6, verify_sigma = 1e-7;
  bool verify_json = false;
  verify->add_option("--input", verify_input, "Solution-set JSON from count")->required();
  verify->add_option("--tol", verify_tol, "Max allowed full residual");
  verify->add_option("--dedup-tol", verify_dedup, "Class distinctness tolerance");
  verify->add_option("--sigma-ratio-min", verify_sigma,
                     "Minimal equilibrated Jacobian sigma_min/sigma_max at each class");
  verify->add_flag("--json", verify_json, "Emit the full JSON report on stdout");
  verify->add_option("--out", verify_out, "Also write the JSON report to this file");

  // formulas
  auto* formulas = app.add_subcommand("formulas", "Exact counting arithmetic");
  formulas->require_subcommand(1);
  auto* perfect = formulas->add_subcommand("perfect", "Summand count when exact");
  int pf_n = 2;
  std::vector<int> pf_degrees;
  perfect->add_option("--n", pf_n, "Projective dimension (variables minus one)");
  perfect->add_option("--degrees", pf_degrees, "Form degrees")->required()->expected(1, -1);
  auto* generic = formulas->add_subcommand("generic-rank", "Generic simultaneous rank");
  int gr_n = 2, gr_r = 1, gr_a = 1;
  generic->add_option("--n", gr_n, "Projective dimension");
  generic->add_option("--r", gr_r, "Number of forms")->required();
  generic->add_option("--degree", gr_a, "Common degree")->required();
  auto* defect = formulas->add_subcommand("defect", "Joint-rank defectivity check");
  int df_n = 2, df_r = 1, df_a1 = 1, df_s = 1, df_a2 = 1;
  defect->add_option("--n", df_n, "Projective dimension");
  defect->add_option("--r", df_r, "Forms of degree a1")->required();
  defect->add_option("--a1", df_a1, "First degree")->required();
  defect->add_option("--s", df_s, "Forms of degree a2")->required();
  defect->add_option("--a2", df_a2, "Second degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (rank->parsed()) {
      if (rank_preset.empty() == rank_input.empty())
        throw std::invalid_argument("rank needs exactly one of --preset / --input");
      return cmd_rank(command, rank_preset, rank_input, rank_order, rank_tol, rank_seed,
                      rank_json, rank_out);
    }
    if (count->parsed()) return cmd_count(command, cf);
    if (verify->parsed())
      return cmd_verify(command, verify_input, verify_tol, verify_dedup, verify_sigma,
                        verify_json, verify_out);
    if (formulas->parsed()) {
      if (perfect->parsed()) {
        const auto k = perfect_case(pf_n, static_cast<int>(pf_degrees.size()), pf_degrees);
        std::cout << Json{{"k", k ? Json(*k) : Json(nullptr)}}.dump() << "\n";
      } else if (generic->parsed()) {
        std::cout << Json{{"k", generic_rank_uniform(gr_n, gr_r, gr_a)}}.dump() << "\n";
      } else {
        const DefectReport rep = defectivity_check(df_n, df_r, df_a1, df_s, df_a2);
        std::cout << Json{{"k", rep.k}, {"kprime", rep.kprime}, {"defective", rep.defective}}
                         .dump()
                  << "\n";
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

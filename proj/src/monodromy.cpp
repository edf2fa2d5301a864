#include "catconf/monodromy.hpp"

#include <optional>
#include <stdexcept>
#include <thread>

namespace catconf {

namespace {

double max_norm_distance(const CVec& a, const CVec& b) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Kuhn's augmenting-path matching on the graph of summand pairs within tol.
bool perfect_matching(const std::vector<std::vector<char>>& adj) {
  const int k = static_cast<int>(adj.size());
  std::vector<int> match_right(k, -1);
  for (int left = 0; left < k; ++left) {
    std::vector<char> visited(k, 0);
    // Depth-first augmenting path from `left`.
    auto augment = [&](auto&& self, int u) -> bool {
      for (int v = 0; v < k; ++v) {
        if (!adj[u][v] || visited[v]) continue;
        visited[v] = 1;
        if (match_right[v] < 0 || self(self, match_right[v])) {
          match_right[v] = u;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, left)) return false;
  }
  return true;
}

bool all_real(const CVec& x, double tol) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (std::abs(x[i].imag()) > tol) return false;
  return true;
}

}  // namespace

bool summands_equivalent(const std::vector<CVec>& a, const std::vector<CVec>& b, double tol) {
  if (a.size() != b.size()) return false;
  const int k = static_cast<int>(a.size());
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    bool any = false;
    for (int j = 0; j < k; ++j) {
      adj[i][j] = max_norm_distance(a[i], b[j]) <= tol ? 1 : 0;
      any = any || adj[i][j];
    }
    if (!any) return false;
  }
  return perfect_matching(adj);
}

bool classes_equivalent(const ParameterizedSystem& sys, const CVec& xa, const CVec& xb,
                        double tol) {
  return summands_equivalent(sys.split_summands(xa), sys.split_summands(xb), tol);
}

namespace {

struct ChainResult {
  bool ok = false;
  CVec x;
};

// base -> v1 -> v2 -> base.
ChainResult track_chain(const ParameterizedSystem& sys, const CVec& base, const CVec& v1,
                        const CVec& v2, const CVec& x, const TrackerConfig& tcfg) {
  ChainResult out;
  PathResult leg = track(sys, base, v1, x, tcfg);
  if (leg.status != PathStatus::kSuccess) return out;
  leg = track(sys, v1, v2, leg.x, tcfg);
  if (leg.status != PathStatus::kSuccess) return out;
  leg = track(sys, v2, base, leg.x, tcfg);
  if (leg.status != PathStatus::kSuccess) return out;
  out.ok = true;
  out.x = std::move(leg.x);
  return out;
}

// Inserts a converged endpoint; returns true when it created a new class.
// Endpoints failing full-residual validation are kept as exploration sheets
// (they solve the tracked system over the base, just not the full one) so
// later loops track them too; run_monodromy drops them from the report.
bool merge_endpoint(const ParameterizedSystem& sys, MonodromyState& state,
                    const MonodromyConfig& cfg, const CVec& x, LoopOutcome& outcome) {
  const double full = sys.full_residual(x, state.base_point).norm();
  const bool validated = full <= cfg.full_residual_tol;
  if (!validated) {
    ++outcome.filtered;
    ++state.filtered_endpoints;
  }
  for (const auto& cls : state.classes)
    if (classes_equivalent(sys, cls.x, x, cfg.dedup_tol)) return false;
  SolutionClass cls;
  cls.x = x;
  cls.residual = full;
  cls.is_real = all_real(x, cfg.reality_tol);
  cls.validated = validated;
  state.classes.push_back(std::move(cls));
  return true;
}

}  // namespace

LoopOutcome triangle_loop(const ParameterizedSystem& sys, MonodromyState& state,
                          const MonodromyConfig& cfg, Rng& rng) {
  const CVec v1 = sys.random_path_point(rng);
  const CVec v2 = sys.random_path_point(rng);

  const int reps = static_cast<int>(state.classes.size());
  std::vector<std::optional<ChainResult>> results(reps);

  const int threads = std::max(1, std::min(cfg.threads, reps));
  if (threads <= 1) {
    for (int i = 0; i < reps; ++i)
      results[i] = track_chain(sys, state.base_point, v1, v2, state.classes[i].x, cfg.tracker);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        for (int i = w; i < reps; i += threads)
          results[i] = track_chain(sys, state.base_point, v1, v2, state.classes[i].x, cfg.tracker);
      });
    }
    for (auto& th : pool) th.join();
  }

  LoopOutcome outcome;
  outcome.tracked = reps;
  state.paths_tracked += reps;
  // Merge in representative order so results never depend on scheduling.
  for (int i = 0; i < reps; ++i) {
    const auto& r = results[i];
    if (!r || !r->ok) {
      ++outcome.failed;
      ++state.path_failures;
      continue;
    }
    if (merge_endpoint(sys, state, cfg, r->x, outcome)) ++outcome.new_classes;
  }
  outcome.discarded = outcome.tracked > 0 && outcome.failed == outcome.tracked;
  return outcome;
}

MonodromyState run_monodromy(const ParameterizedSystem& sys, const StartPair& start,
                             const MonodromyConfig& cfg, std::uint64_t seed) {
  const double start_res = sys.residual(start.x, start.path_point).norm();
  if (!(start_res <= cfg.start_tol))
    throw std::invalid_argument("run_monodromy: start pair does not solve its system");

  MonodromyState state;
  state.base_point = start.path_point;

  const RefineResult polished = refine(sys, state.base_point, start.x, cfg.tracker.refine_tol, 20);
  SolutionClass first;
  first.x = polished.converged ? polished.x : start.x;
  first.residual = sys.full_residual(first.x, state.base_point).norm();
  first.is_real = all_real(first.x, cfg.reality_tol);
  state.classes.push_back(std::move(first));

  for (std::uint64_t loop = 0; state.loops_run < cfg.max_loops; ++loop) {
    Rng rng = Rng::stream(seed, loop);
    const LoopOutcome outcome = triangle_loop(sys, state, cfg, rng);
    ++state.loops_run;
    if (outcome.discarded) continue;
    state.quiet_loops = outcome.new_classes == 0 ? state.quiet_loops + 1 : 0;
    if (state.quiet_loops >= cfg.stable_loops) {
      state.stabilized = true;
      break;
    }
  }
  state.sheets_explored = static_cast<int>(state.classes.size());
  std::erase_if(state.classes, [](const SolutionClass& c) { return !c.validated; });
  return state;
}

}  // namespace catconf

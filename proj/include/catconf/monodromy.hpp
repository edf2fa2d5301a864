#pragma once

#include <cstdint>
#include <vector>

#include "catconf/systems.hpp"
#include "catconf/tracker.hpp"
#include "catconf/types.hpp"

namespace catconf {

struct SolutionClass {
  CVec x;
  double residual = 0.0;  // norm of the full (unrandomized) residual at base
  bool is_real = false;   // every coordinate within reality_tol of the real axis
  bool validated = true;  // full residual within full_residual_tol at the base
};

struct MonodromyConfig {
  int stable_loops = 8;    // consecutive loops without a new class before stopping
  int max_loops = 100;
  double dedup_tol = 1e-6;
  double full_residual_tol = 1e-8;
  double reality_tol = 1e-8;
  double start_tol = 1e-12;  // required residual of the supplied start
  int threads = 1;
  TrackerConfig tracker;
};

struct MonodromyState {
  CVec base_point;  // path-space vector the classes solve (parameters or latent)
  std::vector<SolutionClass> classes;
  int loops_run = 0;
  int quiet_loops = 0;  // current streak without a new class
  bool stabilized = false;
  int paths_tracked = 0;
  int path_failures = 0;
  int filtered_endpoints = 0;  // endpoints that failed full-residual validation
  int sheets_explored = 0;     // distinct classes seen, validated or not
};

struct LoopOutcome {
  int new_classes = 0;
  int tracked = 0;
  int failed = 0;
  int filtered = 0;
  bool discarded = false;  // every path failed; loop does not count as quiet
};

// True iff the two summand lists admit a perfect matching in which every
// matched pair differs by at most tol in the max norm over coordinates.
bool summands_equivalent(const std::vector<CVec>& a, const std::vector<CVec>& b, double tol);

// Summand-matching equivalence of two solution vectors of sys.
bool classes_equivalent(const ParameterizedSystem& sys, const CVec& xa, const CVec& xb,
                        double tol);

// One triangle loop: track every current representative along
// base -> v1 -> v2 -> base with loop vertices drawn from rng, then merge the
// converged endpoints into the class set. Endpoints that fail full-residual
// validation still join the set (marked !validated): for squared systems they
// are honest solutions of the tracked equations and tracking them onward is
// what mixes the cover, even though they do not decompose the base point and
// are dropped from the final report.
LoopOutcome triangle_loop(const ParameterizedSystem& sys, MonodromyState& state,
                          const MonodromyConfig& cfg, Rng& rng);

// Full monodromy run from one exact start pair. Loop vertices for loop L are
// drawn from the stream derived from (seed, L), so runs are reproducible and
// independent of threading. Throws std::invalid_argument if the start does
// not satisfy its own equations to start_tol. The returned classes contain
// only validated solutions of the full system at the base point;
// sheets_explored records how many distinct classes the loops visited before
// that filter.
MonodromyState run_monodromy(const ParameterizedSystem& sys, const StartPair& start,
                             const MonodromyConfig& cfg, std::uint64_t seed);

}  // namespace catconf

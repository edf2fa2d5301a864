#pragma once

#include "catconf/systems.hpp"
#include "catconf/types.hpp"

namespace catconf {

struct TrackerConfig {
  double step_initial = 0.05;
  double step_min = 1e-7;
  double step_growth = 1.5;
  double step_shrink = 0.5;
  int growth_successes = 4;   // consecutive accepted steps before growing
  double corrector_tol = 1e-9;
  int newton_iters = 3;       // corrector iterations per step
  double refine_tol = 1e-12;  // endpoint polish target
  int max_steps = 10000;      // total step attempts
  double divergence_norm = 1e8;
};

enum class PathStatus { kSuccess, kDiverged, kStepUnderflow, kMaxSteps };

struct PathResult {
  PathStatus status = PathStatus::kDiverged;
  CVec x;
  double final_residual = 0.0;
  int steps = 0;    // accepted steps
  int rejects = 0;  // rejected step attempts
};

// Continue the solution x0 of F(x; theta(0)) = 0 along the segment
// theta(t) = (1-t) theta0 + t theta1. Fourth-order predictor on the implicit
// derivative dx/dt = -J^{-1} dF/dt, Newton corrector at fixed t, adaptive
// step control. On kSuccess the endpoint satisfies |F| <= refine_tol.
// kDiverged covers both norm blowup past divergence_norm and an endpoint
// Newton polish that fails to converge.
PathResult track(const ParameterizedSystem& sys, const CVec& theta0, const CVec& theta1,
                 const CVec& x0, const TrackerConfig& cfg = {});

struct RefineResult {
  bool converged = false;
  CVec x;
  double residual = 0.0;
  int iters = 0;
};

// Newton iteration at fixed theta until |F| <= tol or the iteration budget
// runs out; converged=false signals non-convergence (e.g. a far-off start).
RefineResult refine(const ParameterizedSystem& sys, const CVec& theta, const CVec& x0,
                    double tol = 1e-12, int max_iters = 20);

}  // namespace catconf

#include "catconf/tracker.hpp"

#include <cmath>

namespace catconf {

namespace {

bool finite(const CVec& v) { return v.allFinite(); }

// Implicit derivative dx/dt = -J(x, theta(t))^{-1} dF/dt(x, t).
// Returns false if the solve produced non-finite values.
bool derivative(const ParameterizedSystem& sys, const CVec& theta0, const CVec& theta1,
                const CVec& x, double t, CVec& dx, CVec& rhs, CMat& jac) {
  const CVec theta = (1.0 - t) * theta0 + t * theta1;
  sys.jacobian(x, theta, jac);
  sys.path_dt(x, theta0, theta1, t, rhs);
  dx = jac.partialPivLu().solve(-rhs);
  return finite(dx);
}

}  // namespace

PathResult track(const ParameterizedSystem& sys, const CVec& theta0, const CVec& theta1,
                 const CVec& x0, const TrackerConfig& cfg) {
  PathResult res;
  res.x = x0;

  if ((theta1 - theta0).norm() == 0.0) {
    // Constant segment: nothing moves.
    res.status = PathStatus::kSuccess;
    res.final_residual = sys.residual(x0, theta0).norm();
    return res;
  }

  const int dim = sys.x_dim();
  CVec x = x0;
  double t = 0.0;
  double dt = cfg.step_initial;
  int streak = 0;
  int attempts = 0;

  CVec k1(dim), k2(dim), k3(dim), k4(dim), rhs(dim), newton_dx(dim), resid(dim);
  CMat jac(dim, dim);

  while (t < 1.0) {
    if (++attempts > cfg.max_steps) {
      res.status = PathStatus::kMaxSteps;
      res.x = x;
      res.final_residual = sys.residual(x, (1.0 - t) * theta0 + t * theta1).norm();
      return res;
    }
    const double h = std::min(dt, 1.0 - t);

    bool ok = derivative(sys, theta0, theta1, x, t, k1, rhs, jac);
    CVec xp;
    if (ok) ok = derivative(sys, theta0, theta1, x + 0.5 * h * k1, t + 0.5 * h, k2, rhs, jac);
    if (ok) ok = derivative(sys, theta0, theta1, x + 0.5 * h * k2, t + 0.5 * h, k3, rhs, jac);
    if (ok) ok = derivative(sys, theta0, theta1, x + h * k3, t + h, k4, rhs, jac);
    if (ok) {
      xp = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      ok = finite(xp);
    }

    // Corrector: Newton at the advanced time.
    double rnorm = 0.0;
    if (ok) {
      const double tn = t + h;
      const CVec theta = (1.0 - tn) * theta0 + tn * theta1;
      sys.residual(xp, theta, resid);
      rnorm = resid.norm();
      for (int it = 0; it < cfg.newton_iters && rnorm > cfg.corrector_tol; ++it) {
        sys.jacobian(xp, theta, jac);
        newton_dx = jac.partialPivLu().solve(resid);
        if (!finite(newton_dx)) break;
        xp -= newton_dx;
        sys.residual(xp, theta, resid);
        rnorm = resid.norm();
      }
      ok = std::isfinite(rnorm) && rnorm <= cfg.corrector_tol;
    }

    if (!ok) {
      dt *= cfg.step_shrink;
      streak = 0;
      ++res.rejects;
      if (dt < cfg.step_min) {
        res.status = PathStatus::kStepUnderflow;
        res.x = x;
        res.final_residual = sys.residual(x, (1.0 - t) * theta0 + t * theta1).norm();
        return res;
      }
      continue;
    }

    x = xp;
    t += h;
    ++res.steps;
    if (x.norm() > cfg.divergence_norm) {
      res.status = PathStatus::kDiverged;
      res.x = x;
      res.final_residual = rnorm;
      return res;
    }
    if (++streak >= cfg.growth_successes) {
      dt *= cfg.step_growth;
      streak = 0;
    }
  }

  const RefineResult polish = refine(sys, theta1, x, cfg.refine_tol, 20);
  res.x = polish.x;
  res.final_residual = polish.residual;
  res.status = polish.converged ? PathStatus::kSuccess : PathStatus::kDiverged;
  return res;
}

RefineResult refine(const ParameterizedSystem& sys, const CVec& theta, const CVec& x0, double tol,
                    int max_iters) {
  RefineResult out;
  out.x = x0;
  CVec resid = sys.residual(x0, theta);
  out.residual = resid.norm();
  CMat jac(sys.x_dim(), sys.x_dim());
  while (out.residual > tol && out.iters < max_iters) {
    sys.jacobian(out.x, theta, jac);
    const CVec dx = jac.partialPivLu().solve(resid);
    if (!dx.allFinite()) break;
    out.x -= dx;
    ++out.iters;
    sys.residual(out.x, theta, resid);
    const double next = resid.norm();
    if (!std::isfinite(next)) break;
    // Stop once Newton stalls at the numerical floor.
    if (next >= out.residual && next <= 1e-10) {
      out.residual = next;
      break;
    }
    out.residual = next;
  }
  out.converged = std::isfinite(out.residual) && out.residual <= tol;
  return out;
}

}  // namespace catconf

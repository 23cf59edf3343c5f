#include "nmtr/subproblem.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace nmtr {

const char* to_string(CgExit e) {
  switch (e) {
    case CgExit::small_residual: return "small_residual";
    case CgExit::boundary: return "boundary";
    case CgExit::negative_curvature: return "negative_curvature";
    case CgExit::max_cg: return "max_cg";
  }
  return "?";
}

double boundary_tau(const Vec& p, const Vec& d, double delta) {
  const double dd = d.squaredNorm();
  if (!(dd > 0)) throw std::invalid_argument("boundary_tau: degenerate direction");
  if (!(delta > 0)) throw std::invalid_argument("boundary_tau: delta must be > 0");
  const double pd = p.dot(d);
  const double slack = delta * delta - p.squaredNorm();
  const double disc = pd * pd + dd * slack;
  if (disc < 0) throw std::domain_error("boundary_tau: no real crossing");
  const double root = std::sqrt(disc);
  // Larger root, written to avoid cancellation when pd > 0.
  return pd > 0 ? slack / (pd + root) : (root - pd) / dd;
}

SubproblemResult steihaug_solve(const Vec& g, const Matvec& B_apply, double delta,
                                double gnorm0) {
  if (!(delta > 0)) throw std::invalid_argument("steihaug_solve: delta must be > 0");
  if (!g.allFinite()) throw std::invalid_argument("steihaug_solve: non-finite gradient");

  const Eigen::Index n = g.size();
  SubproblemResult res;
  res.d = Vec::Zero(n);

  const double tol = std::min(0.1, std::sqrt(gnorm0)) * gnorm0;
  Vec d = Vec::Zero(n);
  Vec r = g;   // model gradient at d
  Vec p = -g;
  double rr = r.squaredNorm();
  double dnorm = 0.0;
  const long max_iters = static_cast<long>(n) + 10;

  auto finish = [&](CgExit exit, long iters, bool on_boundary) {
    res.exit = exit;
    res.cg_iters = iters;
    res.hit_boundary = on_boundary;
    res.d = d;
    const Vec Bd = B_apply(d);
    if (!Bd.allFinite() || !d.allFinite()) {
      res.numeric_failure = true;
      return;
    }
    res.pred = -(g.dot(d) + 0.5 * d.dot(Bd));
  };

  for (long j = 0; j < max_iters; ++j) {
    const Vec Bp = B_apply(p);
    if (!Bp.allFinite()) {
      res.numeric_failure = true;
      res.cg_iters = j;
      return res;
    }
    const double kappa = p.dot(Bp);
    if (kappa <= 0) {
      // Negative curvature: ride the direction to the boundary.
      d += boundary_tau(d, p, delta) * p;
      finish(CgExit::negative_curvature, j + 1, true);
      return res;
    }
    const double alpha = rr / kappa;
    const Vec d_next = d + alpha * p;
    const double d_next_norm = d_next.norm();
    if (d_next_norm >= delta) {
      d += boundary_tau(d, p, delta) * p;
      finish(CgExit::boundary, j + 1, true);
      return res;
    }
    assert(d_next_norm >= dnorm - 1e-12 * (1.0 + dnorm));  // CG norms grow
    d = d_next;
    dnorm = d_next_norm;
    (void)dnorm;
    r += alpha * Bp;
    const double rr_next = r.squaredNorm();
    if (std::sqrt(rr_next) <= tol) {
      finish(CgExit::small_residual, j + 1, false);
      return res;
    }
    p = -r + (rr_next / rr) * p;
    rr = rr_next;
  }
  finish(CgExit::max_cg, max_iters, false);
  return res;
}

}  // namespace nmtr

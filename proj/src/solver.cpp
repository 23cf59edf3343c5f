#include "nmtr/solver.hpp"

#include "nmtr/hessian.hpp"
#include "nmtr/nonmonotone.hpp"
#include "nmtr/subproblem.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace nmtr {

namespace {

bool windowed_term(Strategy s) {
  return s == Strategy::grippo || s == Strategy::amini || s == Strategy::term1 ||
         s == Strategy::term2;
}

// Inner cycles on smooth problems settle long before this; hitting the cap
// means something is numerically wrong.
constexpr long kMaxInnerRejections = 60;

}  // namespace

double ratio(double T, double f_trial, double pred) {
  if (!(pred > 0)) throw std::domain_error("ratio: pred must be > 0");
  return (T - f_trial) / pred;
}

double update_radius(RadiusRule rule, double delta, double d_norm, double r_hat,
                     const SolverConfig& cfg) {
  if (rule == RadiusRule::step_based) {
    if (r_hat < cfg.mu1) return cfg.c1 * d_norm;
    if (r_hat < cfg.mu2) return delta;
    return std::max(delta, cfg.c2 * d_norm);
  }
  if (r_hat < cfg.mu1) return cfg.rho1 * delta;
  if (r_hat < cfg.mu2) return delta;
  return cfg.rho2 * delta;
}

SolverOutcome minimize(const Problem& p, const SolverConfig& cfg) {
  validate_config(cfg);
  if (!p.eval_f || !p.eval_grad) throw std::invalid_argument("minimize: problem lacks callbacks");
  if (p.x0.size() != p.dim || p.dim <= 0)
    throw std::invalid_argument("minimize: start point does not match dim");

  SolverOutcome out;
  RunRecord& run = out.run;
  run.problem_name = p.name;
  run.solver_name = to_string(cfg.strategy);

  Vec x = p.x0;
  double f = p.eval_f(x);
  run.n_feval = 1;
  Vec g = p.eval_grad(x);
  run.n_geval = 1;
  if (!std::isfinite(f) || !g.allFinite())
    throw std::invalid_argument("minimize: f or gradient non-finite at x0");

  double gnorm = g.norm();
  HessianApprox B(p.dim);
  double delta = cfg.delta0_scale * gnorm;
  NonmonotoneState nm = nm_init(cfg.strategy, f, cfg);
  double max_accepted_f = f;  // history bound for the unbounded-memory terms

  const double inf = std::numeric_limits<double>::infinity();
  long k = 0;
  RunStatus status = RunStatus::numeric_failure;

  while (true) {
    if (gnorm < cfg.epsilon) {
      status = RunStatus::converged;
      break;
    }
    if (k > cfg.k_max) {
      status = RunStatus::max_iter;
      break;
    }

    const double T = reference_value(nm);
    // Reference sandwich at the current iterate: f_k <= T_k <= history max.
    // The windowed terms are bounded by f_l(k); the averaged terms only by
    // the running max of all accepted values.
    if (cfg.strategy != Strategy::monotone) {
      if (f > T + 1e-10 * std::max(1.0, std::abs(nm.flk))) ++run.sandwich_lower_violations;
      const double upper = windowed_term(cfg.strategy) ? nm.flk : max_accepted_f;
      if (T > upper + 1e-10 * std::max(1.0, std::abs(upper))) ++run.sandwich_upper_violations;
    }

    const double Bnorm = B.inf_norm();
    const auto apply = [&B](const Vec& v) { return B.matvec(v); };

    bool fatal = false;
    bool accepted = false;
    long rejections = 0;
    SubproblemResult sp;
    Vec x_trial;
    double f_trial = 0, rhat = 0;

    while (!accepted) {
      sp = steihaug_solve(g, apply, delta, gnorm);
      if (sp.numeric_failure || !(sp.pred > 0)) {
        status = RunStatus::subproblem_failure;
        fatal = true;
        break;
      }
      const double cauchy = cfg.cauchy_fraction_check * gnorm *
                            std::min(delta, gnorm / std::max(Bnorm, 1e-300));
      if (sp.pred < cauchy * (1.0 - 1e-8)) ++run.cauchy_violations;

      x_trial = x + sp.d;
      f_trial = p.eval_f(x_trial);
      ++run.n_feval;
      rhat = std::isfinite(f_trial) ? ratio(T, f_trial, sp.pred) : -inf;
      accepted = rhat >= cfg.mu1;
      if (cfg.keep_trace)
        run.trace.push_back({k, x_trial, f_trial, gnorm, delta, T, nm.flk, rhat, accepted});
      if (accepted) break;

      if (++rejections > kMaxInnerRejections) {
        status = RunStatus::numeric_failure;
        fatal = true;
        break;
      }
      delta = update_radius(cfg.radius_rule, delta, sp.d.norm(), rhat, cfg);
      if (!(delta > 1e-14 * std::max(1.0, x.norm()))) {
        status = RunStatus::numeric_failure;
        fatal = true;
        break;
      }
    }
    if (fatal) break;

    if (T - f_trial < cfg.mu1 * sp.pred - 1e-10 * std::max(1.0, std::abs(T)))
      ++run.acceptance_violations;

    Vec g_new = p.eval_grad(x_trial);
    ++run.n_geval;
    if (!g_new.allFinite()) {
      status = RunStatus::numeric_failure;
      break;
    }

    if (!B.bfgs_update(sp.d, g_new - g)) ++run.bfgs_skips;
    delta = update_radius(cfg.radius_rule, delta, sp.d.norm(), rhat, cfg);

    x = std::move(x_trial);
    f = f_trial;
    g = std::move(g_new);
    gnorm = g.norm();

    const double flk_before = nm.flk;
    const double eta_use = cfg.strategy == Strategy::zhang_hager
                               ? cfg.eta_fixed.value_or(0.85)
                               : nm.eta_prev;
    nm_update(nm, f, eta_use);
    if (cfg.strategy != Strategy::zhang_hager) {
      const double eta_next = eta_schedule(nm.eta_prev, nm.eta_prev2, nm.k);
      nm.eta_prev2 = nm.eta_prev;
      nm.eta_prev = eta_next;
    }
    if (windowed_term(cfg.strategy) &&
        nm.flk > flk_before + 1e-10 * std::max(1.0, std::abs(flk_before)))
      ++run.flk_increase_violations;
    max_accepted_f = std::max(max_accepted_f, f);
    ++k;
  }

  run.n_iter = k;
  run.final_f = f;
  run.final_grad_norm = gnorm;
  run.status = status;
  out.x = std::move(x);
  return out;
}

void write_trace_csv(const RunRecord& run, std::ostream& os) {
  os << "k,f,gnorm,delta,T,rhat,accepted\n";
  char buf[256];
  for (const IterateRecord& r : run.trace) {
    std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", r.k, r.f,
                  r.grad_norm, r.delta, r.T, r.ratio, r.accepted ? 1 : 0);
    os << buf;
  }
}

}  // namespace nmtr

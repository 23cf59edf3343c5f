#include "nmtr/types.hpp"

#include <cmath>
#include <stdexcept>

namespace nmtr {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::monotone: return "monotone";
    case Strategy::grippo: return "grippo";
    case Strategy::zhang_hager: return "zhang_hager";
    case Strategy::mo: return "mo";
    case Strategy::amini: return "amini";
    case Strategy::term1: return "term1";
    case Strategy::term2: return "term2";
  }
  return "?";
}

const char* to_string(RadiusRule r) {
  return r == RadiusRule::step_based ? "step_based" : "classic";
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::converged: return "converged";
    case RunStatus::max_iter: return "max_iter";
    case RunStatus::subproblem_failure: return "subproblem_failure";
    case RunStatus::numeric_failure: return "numeric_failure";
  }
  return "?";
}

void validate_config(const SolverConfig& cfg) {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (!(cfg.mu1 > 0)) fail("mu1 must be > 0");
  if (!(cfg.mu2 >= cfg.mu1)) fail("mu2 >= mu1 required");
  if (!(cfg.mu2 <= 1)) fail("mu2 must be <= 1");
  if (!(cfg.rho1 > 0)) fail("rho1 must be > 0");
  if (!(cfg.rho1 <= 1)) fail("rho1 must be <= 1");
  if (!(cfg.rho2 >= 1)) fail("rho2 must be >= 1");
  if (!(cfg.c1 > 0 && cfg.c1 < 1)) fail("c1 must lie in (0,1)");
  if (!(cfg.c2 >= 1)) fail("c2 must be >= 1");
  if (!(cfg.epsilon > 0)) fail("epsilon must be > 0");
  if (cfg.k_max < 0) fail("k_max must be >= 0");
  if (cfg.window_N < 1) fail("window_N must be >= 1");
  if (!(cfg.eta0 >= 0 && cfg.eta0 < 1)) fail("eta0 must lie in [0,1)");
  if (cfg.eta_fixed && !(*cfg.eta_fixed >= 0 && *cfg.eta_fixed < 1))
    fail("eta_fixed must lie in [0,1)");
  if (!(cfg.delta0_scale > 0)) fail("delta0_scale must be > 0");
  if (!(cfg.cauchy_fraction_check > 0 && cfg.cauchy_fraction_check < 1))
    fail("cauchy_fraction_check must lie in (0,1)");
  if (!std::isfinite(cfg.mu1) || !std::isfinite(cfg.mu2) || !std::isfinite(cfg.epsilon))
    fail("config values must be finite");
}

}  // namespace nmtr

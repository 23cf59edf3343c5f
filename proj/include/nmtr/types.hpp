#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nmtr {

using Vec = Eigen::VectorXd;

// Smooth unconstrained minimization problem with analytic gradient.
struct Problem {
  std::string name;
  Eigen::Index dim = 0;
  std::function<double(const Vec&)> eval_f;
  std::function<Vec(const Vec&)> eval_grad;
  Vec x0;
  std::optional<double> f_star;  // known optimal value, when published
  std::optional<Vec> x_star;     // known optimizer, when published
};

// Reference-value strategy used in the acceptance ratio.
//   monotone     f_k                       (plain trust region)
//   grippo       max of the last window_N+1 accepted values
//   zhang_hager  weighted average C_k with Q_k bookkeeping
//   mo           exponential average D_k
//   amini        eta*f_l(k) + (1-eta)*f_k
//   term1        windowed convex combination, max-guarded once the window fills
//   term2        history max while the window fills, then same guard as term1
enum class Strategy { monotone, grippo, zhang_hager, mo, amini, term1, term2 };

// step_based: shrink to c1*||d||, expand to max(delta, c2*||d||).
// classic: multiply by rho1 on rejection, rho2 on a very successful step.
enum class RadiusRule { step_based, classic };

const char* to_string(Strategy s);
const char* to_string(RadiusRule r);

struct SolverConfig {
  Strategy strategy = Strategy::monotone;
  RadiusRule radius_rule = RadiusRule::step_based;
  double mu1 = 0.05;  // acceptance threshold on the ratio
  double mu2 = 0.9;   // very-successful threshold
  double rho1 = 0.25; // classic shrink factor
  double rho2 = 2.5;  // classic expand factor
  double c1 = 0.25;   // step-based shrink coefficient
  double c2 = 2.5;    // step-based expand coefficient
  double epsilon = 1e-5;  // stop when ||g|| drops below this
  long k_max = 10000;
  long window_N = 10;     // nonmonotone history window
  double eta0 = 0.25;     // first value of the eta schedule
  std::optional<double> eta_fixed;  // fixed eta; zhang_hager defaults to 0.85
  double delta0_scale = 0.1;        // delta0 = delta0_scale * ||g0||
  double cauchy_fraction_check = 0.5;  // beta in the model-decrease assertion
  bool keep_trace = true;
};

// Throws std::invalid_argument naming the first violated constraint.
void validate_config(const SolverConfig& cfg);

// One row per subproblem solve. Rows of an inner cycle share k; the state
// quantities (grad_norm, T, flk) are frozen while the cycle shrinks delta.
struct IterateRecord {
  long k = 0;           // outer iteration index
  Vec x;                // trial point produced by this solve
  double f = 0;         // f at the trial point
  double grad_norm = 0; // ||g|| at the current iterate
  double delta = 0;     // radius used for this solve
  double T = 0;         // nonmonotone reference value
  double flk = 0;       // windowed history max f_l(k)
  double ratio = 0;     // r-hat of this trial
  bool accepted = false;
};

enum class RunStatus { converged, max_iter, subproblem_failure, numeric_failure };
const char* to_string(RunStatus s);

struct RunRecord {
  std::string problem_name;
  std::string solver_name;
  long n_iter = 0;   // accepted outer iterations
  long n_feval = 0;  // every eval_f call, rejected trials included
  long n_geval = 0;  // one per outer iteration plus the initial one
  double final_f = 0;
  double final_grad_norm = 0;
  RunStatus status = RunStatus::numeric_failure;
  std::vector<IterateRecord> trace;

  // Invariant bookkeeping filled in during the run; all stay zero on a
  // healthy run and the verification layers assert exactly that.
  long cauchy_violations = 0;          // pred below the Cauchy-fraction bound
  long sandwich_lower_violations = 0;  // f_k above T_k at an accepted iterate
  long sandwich_upper_violations = 0;  // T_k above its history bound
  long flk_increase_violations = 0;    // windowed max grew (windowed terms)
  long acceptance_violations = 0;      // accepted step broke T - f' >= mu1*pred
  long bfgs_skips = 0;
};

}  // namespace nmtr

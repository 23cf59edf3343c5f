#pragma once

#include "nmtr/types.hpp"

#include <iosfwd>

namespace nmtr {

struct SolverOutcome {
  RunRecord run;
  Vec x;  // final iterate
};

// Trust-region minimization with a dense BFGS model and the configured
// acceptance strategy. Never throws for numeric trouble inside the run; that
// is reported through run.status.
SolverOutcome minimize(const Problem& p, const SolverConfig& cfg);

// r-hat = (T - f_trial)/pred. Throws std::domain_error when pred <= 0.
double ratio(double T, double f_trial, double pred);

// Next radius under the configured rule. r_hat < mu1 is the rejection
// branch (shrink), r_hat >= mu2 expands, anything between keeps delta.
double update_radius(RadiusRule rule, double delta, double d_norm, double r_hat,
                     const SolverConfig& cfg);

// CSV trace, one row per subproblem solve: k,f,gnorm,delta,T,rhat,accepted.
void write_trace_csv(const RunRecord& run, std::ostream& os);

}  // namespace nmtr

#pragma once

#include "nmtr/types.hpp"

namespace nmtr {

enum class CgExit { small_residual, boundary, negative_curvature, max_cg };
const char* to_string(CgExit e);

struct SubproblemResult {
  Vec d;
  double pred = 0;  // model decrease -g.d - 0.5*d.B.d, computed directly
  bool hit_boundary = false;
  long cg_iters = 0;
  CgExit exit = CgExit::small_residual;
  bool numeric_failure = false;  // non-finite matvec output encountered
};

using Matvec = std::function<Vec(const Vec&)>;

// Steihaug-Toint truncated CG on min g.d + 0.5*d.B.d subject to ||d|| <= delta.
// Stops on ||residual|| <= min(0.1, sqrt(gnorm0))*gnorm0, on reaching the
// boundary, on negative curvature (step extended to the boundary), or after
// n+10 iterations. Requires delta > 0 and finite g.
SubproblemResult steihaug_solve(const Vec& g, const Matvec& B_apply, double delta,
                                double gnorm0);

// Positive root tau of ||p + tau*d|| = delta. Requires ||d|| > 0, ||p|| <= delta.
double boundary_tau(const Vec& p, const Vec& d, double delta);

}  // namespace nmtr

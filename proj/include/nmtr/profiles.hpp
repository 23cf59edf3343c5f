#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace nmtr::profiles {

// Positive cost matrix t(p,s) with a parallel failure mask.
struct ProfileMatrix {
  std::vector<std::string> problems;
  std::vector<std::string> solvers;
  Eigen::MatrixXd t;                      // n_p x n_s
  std::vector<std::vector<bool>> failed;  // same shape
};

struct RatioMatrix {
  std::vector<std::string> problems;  // rows kept
  std::vector<std::string> solvers;
  Eigen::MatrixXd r;
  double r_failed = 0;                // sentinel assigned to failed entries
  std::vector<std::string> dropped;   // problems failed by every solver
};

// r(p,s) = t(p,s) / min_s t(p,s) over the successful entries of each row.
// Failed entries get r_failed = max(2 * largest finite ratio, 1e6). Rows
// failed by every solver are dropped (names reported in `dropped`). Throws
// std::invalid_argument on an empty matrix, shape mismatch, nonpositive or
// non-finite successful costs, or when every row is dropped.
RatioMatrix performance_ratios(const ProfileMatrix& m);

// Geometric grid of `points` values from 1 to r_failed/2.
std::vector<double> tau_grid(double r_failed, int points = 200);

// rho_s(tau) = |{p : r(p,s) <= tau}| / n_p, one row per solver. Requires a
// nonempty sorted grid with taus[0] >= 1.
std::vector<std::vector<double>> profile_curve(const RatioMatrix& m,
                                               const std::vector<double>& taus);

// Combined evaluation cost used alongside the gradient and function counts.
inline double mixed_measure(double nf, double ng) { return nf + 3.0 * ng; }

}  // namespace nmtr::profiles

#pragma once

#include "nmtr/types.hpp"

#include <Eigen/Dense>

namespace nmtr {

// Dense symmetric quasi-Newton model matrix, started at the identity.
class HessianApprox {
 public:
  explicit HessianApprox(Eigen::Index n);
  explicit HessianApprox(Eigen::MatrixXd B0);  // tests / exact-Hessian use

  Eigen::Index dim() const { return B_.rows(); }
  const Eigen::MatrixXd& matrix() const { return B_; }
  long skip_count() const { return skips_; }

  Vec matvec(const Vec& v) const;

  // Rank-two update B + y y'/(s'y) - B s s' B/(s'B s), re-symmetrized after
  // the arithmetic. Skipped (returns false) when s'y <= curvature_tol *
  // ||s||*||y||, which keeps B positive definite. Throws std::domain_error
  // on non-finite input.
  bool bfgs_update(const Vec& s, const Vec& y, double curvature_tol = 1e-10);

  double inf_norm() const;  // max absolute row sum

 private:
  Eigen::MatrixXd B_;
  long skips_ = 0;
};

}  // namespace nmtr

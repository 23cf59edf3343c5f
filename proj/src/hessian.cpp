#include "nmtr/hessian.hpp"

#include <stdexcept>

namespace nmtr {

HessianApprox::HessianApprox(Eigen::Index n)
    : B_(Eigen::MatrixXd::Identity(n, n)) {
  if (n <= 0) throw std::invalid_argument("HessianApprox: dimension must be positive");
}

HessianApprox::HessianApprox(Eigen::MatrixXd B0) : B_(std::move(B0)) {
  if (B_.rows() != B_.cols() || B_.rows() == 0)
    throw std::invalid_argument("HessianApprox: matrix must be square");
}

Vec HessianApprox::matvec(const Vec& v) const { return B_.selfadjointView<Eigen::Lower>() * v; }

bool HessianApprox::bfgs_update(const Vec& s, const Vec& y, double curvature_tol) {
  if (!s.allFinite() || !y.allFinite())
    throw std::domain_error("bfgs_update: non-finite input");
  if (s.size() != B_.rows() || y.size() != B_.rows())
    throw std::invalid_argument("bfgs_update: size mismatch");
  const double sy = s.dot(y);
  if (!(sy > curvature_tol * s.norm() * y.norm())) {
    ++skips_;
    return false;
  }
  const Vec Bs = matvec(s);
  const double sBs = s.dot(Bs);
  if (!(sBs > 0)) {  // cannot happen for a positive definite B with s != 0
    ++skips_;
    return false;
  }
  B_.noalias() += (y * y.transpose()) / sy;
  B_.noalias() -= (Bs * Bs.transpose()) / sBs;
  const Eigen::MatrixXd Bt = B_.transpose();
  B_ = 0.5 * (B_ + Bt);  // keep exact symmetry
  return true;
}

double HessianApprox::inf_norm() const {
  return B_.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace nmtr

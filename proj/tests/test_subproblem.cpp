#include "doctest.h"

#include "nmtr/subproblem.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

using namespace nmtr;

namespace {

Matvec dense(const Eigen::MatrixXd& B) {
  return [B](const Vec& v) -> Vec { return B * v; };
}

Eigen::MatrixXd random_spd(int n, std::mt19937_64& rng, double shift) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = nd(rng);
  return A * A.transpose() + shift * Eigen::MatrixXd::Identity(n, n);
}

}  // namespace

TEST_CASE("boundary crossing point") {
  Vec p0 = Vec::Zero(2), d0(2);
  d0 << 1, 0;
  CHECK(boundary_tau(p0, d0, 3.0) == doctest::Approx(3.0).epsilon(1e-15));

  Vec p1(2), d1(2);
  p1 << 1, 0;
  d1 << 1, 0;
  CHECK(boundary_tau(p1, d1, 2.0) == doctest::Approx(1.0).epsilon(1e-15));

  Vec d2(2);
  d2 << 0, 1;
  CHECK(boundary_tau(p1, d2, std::sqrt(2.0)) == doctest::Approx(1.0).epsilon(1e-14));

  // The returned root lands on the sphere for random inputs.
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 100; ++t) {
    Vec p(4), d(4);
    for (int i = 0; i < 4; ++i) {
      p[i] = 0.3 * nd(rng);
      d[i] = nd(rng);
    }
    const double delta = p.norm() + 0.5 + std::abs(nd(rng));
    const double tau = boundary_tau(p, d, delta);
    CHECK(tau >= 0.0);
    CHECK((p + tau * d).norm() == doctest::Approx(delta).epsilon(1e-12));
  }
}

TEST_CASE("separable quadratic, interior minimizer") {
  Vec g(2);
  g << 1, 0;
  const auto res = steihaug_solve(g, dense(Eigen::MatrixXd::Identity(2, 2)), 2.0, g.norm());
  CHECK(res.d[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(res.d[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(res.pred == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(res.hit_boundary);
  CHECK(res.exit == CgExit::small_residual);
}

TEST_CASE("separable quadratic, clipped at the boundary") {
  Vec g(2);
  g << 1, 0;
  const auto res = steihaug_solve(g, dense(Eigen::MatrixXd::Identity(2, 2)), 0.5, g.norm());
  CHECK(res.d[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(res.pred == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(res.hit_boundary);
  CHECK(res.exit == CgExit::boundary);
}

TEST_CASE("negative curvature runs to the boundary") {
  Vec g(2);
  g << 1, 0;
  const auto res = steihaug_solve(g, dense(-Eigen::MatrixXd::Identity(2, 2)), 1.0, g.norm());
  CHECK(res.d[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(res.pred == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(res.hit_boundary);
  CHECK(res.exit == CgExit::negative_curvature);
}

TEST_CASE("non-finite matvec output is reported, not thrown") {
  Vec g(2);
  g << 1, 1;
  const Matvec bad = [](const Vec& v) -> Vec {
    Vec r = v;
    r[0] = std::nan("");
    return r;
  };
  const auto res = steihaug_solve(g, bad, 1.0, g.norm());
  CHECK(res.numeric_failure);
}

TEST_CASE("matches the dense solve when the tolerance forces full accuracy") {
  // The residual rule min(0.1, sqrt(||g||))*||g|| tightens as ||g|| shrinks,
  // so tiny gradients make truncated CG run to the exact Newton point.
  std::mt19937_64 rng(123);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 50; ++t) {
    const Eigen::MatrixXd B = random_spd(5, rng, 5.0);
    Vec g(5);
    for (int i = 0; i < 5; ++i) g[i] = nd(rng);
    g *= 1e-16 / g.norm();
    const Vec newton = -B.ldlt().solve(g);
    const auto res = steihaug_solve(g, dense(B), 10.0 * newton.norm(), g.norm());
    CHECK_FALSE(res.hit_boundary);
    CHECK((res.d - newton).norm() <= 1e-6 * newton.norm());
  }
}

TEST_CASE("contract properties on random definite and indefinite models") {
  std::mt19937_64 rng(456);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(0.05, 5.0);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Eigen::MatrixXd B = random_spd(n, rng, 0.5);
    if (t % 3 == 1) B -= 2.0 * ud(rng) * Eigen::MatrixXd::Identity(n, n);  // indefinite
    if (t % 3 == 2) B.setZero();                                           // degenerate
    Vec g(n);
    for (int i = 0; i < n; ++i) g[i] = nd(rng);
    if (g.norm() == 0.0) g[0] = 1.0;
    const double delta = ud(rng);
    const double gnorm = g.norm();

    const auto res = steihaug_solve(g, dense(B), delta, gnorm);
    REQUIRE_FALSE(res.numeric_failure);
    CHECK(res.d.norm() <= delta * (1.0 + 1e-12));
    CHECK(res.pred > 0.0);

    // pred is the model decrease computed directly.
    const double direct = -g.dot(res.d) - 0.5 * res.d.dot(B * res.d);
    CHECK(res.pred == doctest::Approx(direct).epsilon(1e-10));

    // Cauchy fraction with the matrix inf-norm as the curvature bound.
    const double bnorm = std::max(B.cwiseAbs().rowwise().sum().maxCoeff(), 1e-300);
    const double bound = 0.5 * gnorm * std::min(delta, gnorm / bnorm);
    CHECK(res.pred >= bound * (1.0 - 1e-8));

    if (res.exit == CgExit::small_residual) {
      // Interior exit honours the truncation rule.
      const double tol = std::min(0.1, std::sqrt(gnorm)) * gnorm;
      CHECK((B * res.d + g).norm() <= tol * (1.0 + 1e-6) + 1e-12);
      CHECK_FALSE(res.hit_boundary);
    }
    if (res.hit_boundary) CHECK(res.d.norm() == doctest::Approx(delta).epsilon(1e-10));
  }
}

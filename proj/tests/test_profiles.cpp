#include "doctest.h"

#include "nmtr/profiles.hpp"

#include <cmath>
#include <random>

using namespace nmtr::profiles;

namespace {

ProfileMatrix make(int np, int ns) {
  ProfileMatrix m;
  for (int p = 0; p < np; ++p) m.problems.push_back("p" + std::to_string(p));
  for (int s = 0; s < ns; ++s) m.solvers.push_back("s" + std::to_string(s));
  m.t = Eigen::MatrixXd::Ones(np, ns);
  m.failed.assign(np, std::vector<bool>(ns, false));
  return m;
}

// Brute-force curve: for each solver count ratios <= tau over all kept rows,
// divided by the pre-drop problem count.
std::vector<std::vector<double>> reference_curve(const RatioMatrix& rm, int np_total,
                                                 const std::vector<double>& taus) {
  std::vector<std::vector<double>> rho(rm.solvers.size());
  for (size_t s = 0; s < rm.solvers.size(); ++s) {
    for (double tau : taus) {
      int cnt = 0;
      for (Eigen::Index p = 0; p < rm.r.rows(); ++p)
        if (rm.r(p, s) <= tau) ++cnt;
      rho[s].push_back(static_cast<double>(cnt) / static_cast<double>(np_total));
    }
  }
  return rho;
}

}  // namespace

TEST_CASE("two-by-two worked example") {
  ProfileMatrix m = make(2, 2);
  m.t << 1, 2, 2, 1;
  const RatioMatrix rm = performance_ratios(m);
  CHECK(rm.r(0, 0) == 1.0);
  CHECK(rm.r(0, 1) == 2.0);
  CHECK(rm.r(1, 0) == 2.0);
  CHECK(rm.r(1, 1) == 1.0);
  CHECK(rm.r_failed == 1e6);  // max(2*2, 1e6)
  CHECK(rm.dropped.empty());

  const std::vector<double> taus{1.0, 1.5, 2.0, 4.0};
  const auto rho = profile_curve(rm, taus);
  REQUIRE(rho.size() == 2);
  CHECK(rho[0][0] == 0.5);
  CHECK(rho[1][0] == 0.5);
  CHECK(rho[0][2] == 1.0);
  CHECK(rho[1][2] == 1.0);
}

TEST_CASE("failures take the sentinel ratio and full-failure rows drop") {
  ProfileMatrix m = make(3, 2);
  m.t << 1, 2, 3, 1, 5, 5;
  m.failed[0][1] = true;
  m.failed[2][0] = true;
  m.failed[2][1] = true;
  const RatioMatrix rm = performance_ratios(m);
  REQUIRE(rm.dropped == std::vector<std::string>{"p2"});
  REQUIRE(rm.r.rows() == 2);
  CHECK(rm.r(0, 0) == 1.0);
  CHECK(rm.r(0, 1) == rm.r_failed);
  CHECK(rm.r(1, 0) == 3.0);
  CHECK(rm.r(1, 1) == 1.0);

  // Curves divide by the pre-drop problem count, so they plateau below 1.
  const std::vector<double> taus{1.0, 3.0, rm.r_failed};
  const auto rho = profile_curve(rm, taus);
  CHECK(rho[0][0] == doctest::Approx(1.0 / 3.0));
  CHECK(rho[0][1] == doctest::Approx(2.0 / 3.0));
  CHECK(rho[0][2] == doctest::Approx(2.0 / 3.0));  // dropped row never counts
  CHECK(rho[1][2] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("input validation") {
  ProfileMatrix empty;
  CHECK_THROWS_AS(performance_ratios(empty), std::invalid_argument);

  ProfileMatrix m = make(2, 2);
  m.t(0, 0) = 0.0;
  CHECK_THROWS_AS(performance_ratios(m), std::invalid_argument);
  m.t(0, 0) = -1.0;
  CHECK_THROWS_AS(performance_ratios(m), std::invalid_argument);

  ProfileMatrix shape = make(2, 2);
  shape.failed.pop_back();
  CHECK_THROWS_AS(performance_ratios(shape), std::invalid_argument);

  ProfileMatrix allfail = make(2, 2);
  allfail.failed.assign(2, std::vector<bool>(2, true));
  CHECK_THROWS_AS(performance_ratios(allfail), std::invalid_argument);

  const RatioMatrix rm = performance_ratios(make(2, 2));
  CHECK_THROWS_AS(profile_curve(rm, std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(profile_curve(rm, std::vector<double>{0.5, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(profile_curve(rm, std::vector<double>{2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("tau grid is geometric from 1 to half the sentinel") {
  const std::vector<double> g = tau_grid(1e6, 200);
  REQUIRE(g.size() == 200);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 5e5);
  for (size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  const double q = g[1] / g[0];
  for (size_t i = 2; i < g.size(); ++i)
    CHECK(g[i] / g[i - 1] == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("mixed measure weighs gradients three to one") {
  CHECK(mixed_measure(41.0, 32.0) == 137.0);
  CHECK(mixed_measure(0.0, 0.0) == 0.0);
}

TEST_CASE("random matrices against the brute-force reference") {
  std::mt19937_64 rng(987);
  std::uniform_real_distribution<double> cost(0.5, 100.0);
  std::bernoulli_distribution failp(0.2);
  for (int trial = 0; trial < 30; ++trial) {
    ProfileMatrix m = make(8, 3);
    bool any_kept = false;
    for (int p = 0; p < 8; ++p) {
      bool row_ok = false;
      for (int s = 0; s < 3; ++s) {
        m.t(p, s) = cost(rng);
        m.failed[p][s] = failp(rng);
        row_ok = row_ok || !m.failed[p][s];
      }
      any_kept = any_kept || row_ok;
    }
    if (!any_kept) m.failed[0][0] = false;

    const RatioMatrix rm = performance_ratios(m);

    // Reference ratios straight from the definition.
    Eigen::Index row = 0;
    for (int p = 0; p < 8; ++p) {
      double best = std::numeric_limits<double>::infinity();
      bool ok = false;
      for (int s = 0; s < 3; ++s)
        if (!m.failed[p][s]) {
          best = std::min(best, m.t(p, s));
          ok = true;
        }
      if (!ok) continue;  // dropped row
      for (int s = 0; s < 3; ++s) {
        const double want = m.failed[p][s] ? rm.r_failed : m.t(p, s) / best;
        CHECK(rm.r(row, s) == want);
      }
      ++row;
    }
    CHECK(row == rm.r.rows());

    const std::vector<double> taus = tau_grid(rm.r_failed, 50);
    const auto rho = profile_curve(rm, taus);
    const auto ref = reference_curve(rm, 8, taus);
    for (size_t s = 0; s < 3; ++s)
      for (size_t i = 0; i < taus.size(); ++i) CHECK(rho[s][i] == ref[s][i]);
  }
}

#include "doctest.h"

#include "nmtr/nonmonotone.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace nmtr;

namespace {

SolverConfig cfg_with(long N, double eta0) {
  SolverConfig cfg;
  cfg.window_N = N;
  cfg.eta0 = eta0;
  return cfg;
}

}  // namespace

TEST_CASE("eta schedule halves first and averages afterwards") {
  CHECK(eta_schedule(0.25, 0.0, 1) == 0.125);
  CHECK(eta_schedule(0.125, 0.25, 2) == 0.1875);
  CHECK(eta_schedule(0.1875, 0.125, 3) == 0.15625);
  CHECK(eta_schedule(0.0, 0.0, 1) == 0.0);
  CHECK(eta_schedule(0.0, 0.0, 5) == 0.0);
  CHECK_THROWS_AS(eta_schedule(0.25, 0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(eta_schedule(1.0, 0.5, 2), std::invalid_argument);
}

TEST_CASE("initial state reports f0 for every strategy") {
  const SolverConfig cfg = cfg_with(10, 0.25);
  for (Strategy s : {Strategy::monotone, Strategy::grippo, Strategy::zhang_hager,
                     Strategy::mo, Strategy::amini, Strategy::term1, Strategy::term2}) {
    NonmonotoneState st = nm_init(s, 3.5, cfg);
    CHECK(reference_value(st) == 3.5);
    CHECK(st.k == 0);
  }
  CHECK_THROWS_AS(nm_init(Strategy::term1, std::nan(""), cfg), std::invalid_argument);
}

TEST_CASE("two-term growth recursion") {
  // T1 = (1-eta0) f1 + eta0 f0 with f0=10, f1=8, eta0=0.5.
  CHECK(tbar_recursive_step(10.0, 8.0, 0.5, 0.0, 0.0, 0.0) == 9.0);
  NonmonotoneState st = nm_init(Strategy::term1, 10.0, cfg_with(2, 0.5));
  nm_update(st, 8.0, 0.5);
  CHECK(st.tbar == 9.0);
  nm_update(st, 6.0, 0.5);
  CHECK(st.tbar == 7.5);  // 0.5*6 + 0.5*9
}

TEST_CASE("sliding correction term uses the two oldest history values") {
  NonmonotoneState st = nm_init(Strategy::term1, 10.0, cfg_with(2, 0.5));
  nm_update(st, 8.0, 0.5);
  nm_update(st, 6.0, 0.5);
  // Window now holds N+1 = 3 values; the next update slides.
  nm_update(st, 9.0, 0.5);
  // xi = 0.5^3, correction 0.125*(8-10); 0.5*9 + 0.5*7.5 - 0.25 = 8.
  CHECK(st.tbar == doctest::Approx(8.0).epsilon(1e-15));
  const std::vector<double> fs{8.0, 6.0, 9.0};
  const std::vector<double> etas{0.5, 0.5};
  CHECK(st.tbar == doctest::Approx(tbar_direct(fs, etas)).epsilon(1e-14));
}

TEST_CASE("windowed combination weights") {
  const std::vector<double> etas{0.5, 0.5};
  const std::vector<double> w = tbar_weights(etas);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == 0.25);  // oldest: full eta product
  CHECK(w[1] == 0.25);
  CHECK(w[2] == 0.5);   // newest: 1 - last eta
  const std::vector<double> fs{10.0, 8.0, 6.0};
  CHECK(tbar_direct(fs, etas) == 7.5);

  CHECK_THROWS_AS(tbar_weights(std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(tbar_direct(std::vector<double>{}, std::vector<double>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(tbar_direct(fs, std::vector<double>{0.5}), std::invalid_argument);
}

TEST_CASE("strategy reference values after one accepted step") {
  // One fold of f=8 into f0=10 history, per strategy bookkeeping.
  SUBCASE("zhang_hager") {
    NonmonotoneState st = nm_init(Strategy::zhang_hager, 10.0, cfg_with(10, 0.25));
    nm_update(st, 8.0, 0.85);
    CHECK(st.Q == 1.85);
    CHECK(st.C == doctest::Approx(16.5 / 1.85).epsilon(1e-15));
    CHECK(reference_value(st) == st.C);
  }
  SUBCASE("mo") {
    NonmonotoneState st = nm_init(Strategy::mo, 4.0, cfg_with(10, 0.25));
    nm_update(st, 2.0, 0.5);
    CHECK(st.D == 3.0);  // 0.5*4 + 0.5*2
    CHECK(reference_value(st) == 3.0);
  }
  SUBCASE("amini") {
    NonmonotoneState st = nm_init(Strategy::amini, 10.0, cfg_with(10, 0.25));
    nm_update(st, 6.0, 0.5);
    CHECK(st.flk == 10.0);
    CHECK(st.R == 8.0);  // 0.5*10 + 0.5*6
    CHECK(reference_value(st) == 8.0);
  }
  SUBCASE("grippo") {
    NonmonotoneState st = nm_init(Strategy::grippo, 10.0, cfg_with(10, 0.25));
    nm_update(st, 8.0, 0.5);
    CHECK(reference_value(st) == 10.0);
    nm_update(st, 12.0, 0.5);
    CHECK(reference_value(st) == 12.0);
  }
  SUBCASE("monotone") {
    NonmonotoneState st = nm_init(Strategy::monotone, 10.0, cfg_with(10, 0.25));
    nm_update(st, 8.0, 0.5);
    CHECK(reference_value(st) == 8.0);
  }
}

TEST_CASE("term2 tracks the window max until the window fills") {
  NonmonotoneState st = nm_init(Strategy::term2, 10.0, cfg_with(2, 0.5));
  nm_update(st, 8.0, 0.5);
  CHECK(st.k == 1);
  CHECK(reference_value(st) == 10.0);  // history max, not the average 9
  nm_update(st, 6.0, 0.5);
  // k = N: window just filled, switch to the guarded combination.
  CHECK(reference_value(st) == doctest::Approx(7.5).epsilon(1e-15));
}

TEST_CASE("term1 is max-guarded once the window fills") {
  NonmonotoneState st = nm_init(Strategy::term1, 10.0, cfg_with(2, 0.5));
  nm_update(st, 8.0, 0.5);
  CHECK(reference_value(st) == 9.0);  // pre-fill: the plain combination
  nm_update(st, 6.0, 0.5);
  CHECK(reference_value(st) == doctest::Approx(7.5).epsilon(1e-15));
  nm_update(st, 9.0, 0.5);
  // tbar slides to 8 but the newest value is larger; guard picks f.
  CHECK(reference_value(st) == 9.0);
}

TEST_CASE("update rejects bad input") {
  NonmonotoneState st = nm_init(Strategy::term1, 1.0, cfg_with(3, 0.25));
  CHECK_THROWS_AS(nm_update(st, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(nm_update(st, 2.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(nm_update(st, std::nan(""), 0.5), std::invalid_argument);
}

TEST_CASE("recursive slide matches the direct evaluation on random windows") {
  std::mt19937_64 rng(20240901);
  std::uniform_real_distribution<double> uf(-10.0, 10.0);
  std::uniform_real_distribution<double> ue(0.0, 1.0 - 1e-12);
  std::uniform_int_distribution<int> uN(1, 10);
  std::uniform_int_distribution<int> usteps(1, 25);

  for (int trial = 0; trial < 300; ++trial) {
    const long N = uN(rng);
    NonmonotoneState st = nm_init(Strategy::term1, uf(rng), cfg_with(N, 0.25));
    std::vector<double> fs{st.f_window[0]};
    std::vector<double> etas;
    const int steps = usteps(rng);
    for (int s = 0; s < steps; ++s) {
      const double f = uf(rng);
      const double e = ue(rng);
      nm_update(st, f, e);
      fs.push_back(f);
      etas.push_back(e);

      const size_t L = std::min<size_t>(fs.size(), static_cast<size_t>(N) + 1);
      const std::span<const double> fw(fs.data() + fs.size() - L, L);
      const std::span<const double> ew(etas.data() + etas.size() - (L - 1), L - 1);
      const double direct = tbar_direct(fw, ew);
      CHECK(std::abs(st.tbar - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));

      const std::vector<double> w = tbar_weights(ew);
      double sum = 0.0;
      for (double wi : w) {
        CHECK(wi >= 0.0);
        sum += wi;
      }
      CHECK(std::abs(sum - 1.0) <= 1e-14);

      // flk recomputed from the raw window equals the running value.
      double mx = fw[0];
      for (double v : fw) mx = std::max(mx, v);
      CHECK(st.flk == mx);
    }
  }
}

TEST_CASE("all-zero eta collapses every windowed term to the newest f") {
  NonmonotoneState st = nm_init(Strategy::term1, 5.0, cfg_with(3, 0.0));
  const double fs[] = {4.0, 3.5, 3.25, 3.0, 2.0};
  for (double f : fs) {
    nm_update(st, f, 0.0);
    CHECK(st.tbar == f);  // bitwise: (1-0)*f + 0 + 0
    CHECK(reference_value(st) == f);
  }
}

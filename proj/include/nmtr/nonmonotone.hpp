#pragma once

#include "nmtr/types.hpp"

#include <deque>
#include <span>

namespace nmtr {

// Running state of the nonmonotone reference term. k counts accepted steps,
// so k = 0 is the starting point and reference_value == f0 there for every
// strategy. Windows store newest-last.
struct NonmonotoneState {
  Strategy strategy = Strategy::monotone;
  long N = 10;
  long k = 0;
  std::deque<double> f_window;    // last min(k+1, N+1) accepted f values
  std::deque<double> eta_window;  // last min(k, N+1) eta values
  double tbar = 0;  // windowed convex-combination term
  double xi = 1;    // product of the stored eta_window entries
  double C = 0;     // zhang_hager average
  double Q = 1;     // zhang_hager weight sum
  double D = 0;     // mo exponential average
  double R = 0;     // amini mix
  double flk = 0;   // windowed history max f_l(k)
  double eta_prev = 0;   // schedule state: last eta
  double eta_prev2 = 0;  // schedule state: eta before that
};

NonmonotoneState nm_init(Strategy s, double f0, const SolverConfig& cfg);

// Current reference value T_k for the configured strategy.
double reference_value(const NonmonotoneState& st);

// Advance every running quantity with an accepted value. eta_next must lie
// in [0,1); it is the weight attached to the history when folding f_next in.
void nm_update(NonmonotoneState& st, double f_next, double eta_next);

// Weights of the convex combination for a window of L values given the L-1
// etas between them (oldest first). The newest value gets 1-eta[L-2], older
// entries pick up eta products, the oldest keeps the bare product of all
// etas. Componentwise >= 0 and sums to 1.
std::vector<double> tbar_weights(std::span<const double> eta_window);

// Direct windowed evaluation: dot(tbar_weights(etas), f_window).
double tbar_direct(std::span<const double> f_window, std::span<const double> eta_window);

// Sliding-window recursion
//   tbar_new = (1-eta)*f_new + eta*tbar_prev + xi*(f_out - f_out_prev)
// where f_out / f_out_prev are the two oldest history values and xi is the
// product of the last N+1 etas. Callers in the growth phase (window not yet
// full) pass xi = 0.
double tbar_recursive_step(double tbar_prev, double f_new, double eta_new,
                           double xi, double f_out, double f_out_prev);

// eta_1 = eta_0/2 and eta_k = (eta_{k-1} + eta_{k-2})/2 afterwards.
// eta_prev is eta_{k-1}, eta_prev2 is eta_{k-2} (ignored when k == 1).
double eta_schedule(double eta_prev, double eta_prev2, long k);

}  // namespace nmtr

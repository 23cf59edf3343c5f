#include "nmtr/nonmonotone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nmtr {

namespace {

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in [0,1)");
}

}  // namespace

NonmonotoneState nm_init(Strategy s, double f0, const SolverConfig& cfg) {
  if (!std::isfinite(f0)) throw std::invalid_argument("nm_init: f0 must be finite");
  NonmonotoneState st;
  st.strategy = s;
  st.N = cfg.window_N;
  st.k = 0;
  st.f_window.push_back(f0);
  st.tbar = f0;
  st.xi = 1.0;  // empty product
  st.C = f0;
  st.Q = 1.0;
  st.D = f0;
  st.R = f0;
  st.flk = f0;
  st.eta_prev = cfg.eta0;
  st.eta_prev2 = cfg.eta0;
  return st;
}

double reference_value(const NonmonotoneState& st) {
  const double fk = st.f_window.back();
  switch (st.strategy) {
    case Strategy::monotone: return fk;
    case Strategy::grippo: return st.flk;
    case Strategy::zhang_hager: return st.C;
    case Strategy::mo: return st.D;
    case Strategy::amini: return st.R;
    case Strategy::term1:
      return st.k < st.N ? st.tbar : std::max(st.tbar, fk);
    case Strategy::term2:
      return st.k < st.N ? st.flk : std::max(st.tbar, fk);
  }
  return fk;
}

void nm_update(NonmonotoneState& st, double f_next, double eta_next) {
  check_eta(eta_next);
  if (!std::isfinite(f_next)) throw std::invalid_argument("nm_update: f must be finite");

  // Window full means the state already covers N+1 values, so the slide
  // drops f_{k-N} while the two oldest entries feed the correction term.
  const bool full = static_cast<long>(st.f_window.size()) == st.N + 1;
  const double f_out_prev = full ? st.f_window[0] : 0.0;
  const double f_out = full ? st.f_window[1] : 0.0;

  st.eta_window.push_back(eta_next);
  if (static_cast<long>(st.eta_window.size()) > st.N + 1) st.eta_window.pop_front();
  double prod = 1.0;
  for (double e : st.eta_window) prod *= e;  // recomputed, never divided out
  st.xi = prod;

  st.tbar = full ? tbar_recursive_step(st.tbar, f_next, eta_next, st.xi, f_out, f_out_prev)
                 : tbar_recursive_step(st.tbar, f_next, eta_next, 0.0, 0.0, 0.0);

  st.f_window.push_back(f_next);
  if (static_cast<long>(st.f_window.size()) > st.N + 1) st.f_window.pop_front();
  st.flk = *std::max_element(st.f_window.begin(), st.f_window.end());

  const double Qn = eta_next * st.Q + 1.0;
  st.C = (eta_next * st.Q * st.C + f_next) / Qn;
  st.Q = Qn;

  st.D = eta_next * st.D + (1.0 - eta_next) * f_next;
  st.R = eta_next * st.flk + (1.0 - eta_next) * f_next;

  ++st.k;
}

std::vector<double> tbar_weights(std::span<const double> eta_window) {
  for (double e : eta_window) check_eta(e);
  const size_t L = eta_window.size() + 1;
  std::vector<double> w(L);
  // Weights newest-to-oldest: 1-eta[L-2], eta[L-2](1-eta[L-3]), ...,
  // with the oldest entry taking the full eta product.
  double acc = 1.0;
  for (size_t i = L; i-- > 1;) {
    w[i] = acc * (1.0 - eta_window[i - 1]);
    acc *= eta_window[i - 1];
  }
  w[0] = acc;
  return w;
}

double tbar_direct(std::span<const double> f_window, std::span<const double> eta_window) {
  if (f_window.empty()) throw std::invalid_argument("tbar_direct: empty window");
  if (eta_window.size() + 1 != f_window.size())
    throw std::invalid_argument("tbar_direct: mismatched window lengths");
  const std::vector<double> w = tbar_weights(eta_window);
  double t = 0.0;
  for (size_t i = 0; i < w.size(); ++i) t += w[i] * f_window[i];
  return t;
}

double tbar_recursive_step(double tbar_prev, double f_new, double eta_new,
                           double xi, double f_out, double f_out_prev) {
  check_eta(eta_new);
  return (1.0 - eta_new) * f_new + eta_new * tbar_prev + xi * (f_out - f_out_prev);
}

double eta_schedule(double eta_prev, double eta_prev2, long k) {
  if (k < 1) throw std::invalid_argument("eta_schedule: k must be >= 1");
  check_eta(eta_prev);
  if (k == 1) return eta_prev / 2.0;
  check_eta(eta_prev2);
  return (eta_prev + eta_prev2) / 2.0;
}

}  // namespace nmtr

#include "nmtr/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nmtr::profiles {

RatioMatrix performance_ratios(const ProfileMatrix& m) {
  const Eigen::Index np = m.t.rows(), ns = m.t.cols();
  if (np == 0 || ns == 0) throw std::invalid_argument("profile matrix is empty");
  if (static_cast<Eigen::Index>(m.failed.size()) != np)
    throw std::invalid_argument("failure mask shape mismatch");
  for (const auto& row : m.failed)
    if (static_cast<Eigen::Index>(row.size()) != ns)
      throw std::invalid_argument("failure mask shape mismatch");

  // Largest finite ratio over rows that have at least one success.
  double rmax = 1.0;
  std::vector<bool> keep(np, true);
  std::vector<double> best(np, 0.0);
  for (Eigen::Index i = 0; i < np; ++i) {
    double lo = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < ns; ++j) {
      if (m.failed[i][j]) continue;
      const double t = m.t(i, j);
      if (!(t > 0) || !std::isfinite(t))
        throw std::invalid_argument("nonpositive or non-finite measure for a successful run");
      lo = std::min(lo, t);
    }
    if (!std::isfinite(lo)) {
      keep[i] = false;  // every solver failed here; the row carries no ranking signal
      continue;
    }
    best[i] = lo;
    for (Eigen::Index j = 0; j < ns; ++j)
      if (!m.failed[i][j]) rmax = std::max(rmax, m.t(i, j) / lo);
  }

  RatioMatrix out;
  out.solvers = m.solvers;
  out.r_failed = std::max(2.0 * rmax, 1e6);
  Eigen::Index nkeep = 0;
  for (Eigen::Index i = 0; i < np; ++i) {
    if (keep[i]) ++nkeep;
    else out.dropped.push_back(m.problems[static_cast<size_t>(i)]);
  }
  if (nkeep == 0) throw std::invalid_argument("every problem failed on every solver");
  out.r.resize(nkeep, ns);
  out.problems.reserve(static_cast<size_t>(nkeep));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < np; ++i) {
    if (!keep[i]) continue;
    out.problems.push_back(m.problems[static_cast<size_t>(i)]);
    for (Eigen::Index j = 0; j < ns; ++j)
      out.r(k, j) = m.failed[i][j] ? out.r_failed : m.t(i, j) / best[i];
    ++k;
  }
  return out;
}

std::vector<double> tau_grid(double r_failed, int points) {
  if (!(r_failed > 1.0)) throw std::invalid_argument("r_failed must exceed 1");
  if (points < 2) throw std::invalid_argument("tau grid needs at least 2 points");
  const double hi = r_failed / 2.0;
  std::vector<double> taus(static_cast<size_t>(points));
  const double step = std::log(hi) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) taus[static_cast<size_t>(i)] = std::exp(step * i);
  taus.front() = 1.0;
  taus.back() = hi;
  return taus;
}

std::vector<std::vector<double>> profile_curve(const RatioMatrix& m,
                                               const std::vector<double>& taus) {
  const Eigen::Index np = m.r.rows(), ns = m.r.cols();
  if (np == 0) throw std::invalid_argument("no problems left after dropping all-failed rows");
  if (taus.empty() || !(taus.front() >= 1.0) || !std::is_sorted(taus.begin(), taus.end()))
    throw std::invalid_argument("tau grid must be sorted and start at >= 1");
  // Dropped problems stay in the denominator, so curves of a portfolio with
  // universal failures plateau below 1 instead of renormalizing them away.
  const double denom = static_cast<double>(np + static_cast<Eigen::Index>(m.dropped.size()));
  std::vector<std::vector<double>> rho(static_cast<size_t>(ns),
                                       std::vector<double>(taus.size(), 0.0));
  for (Eigen::Index j = 0; j < ns; ++j)
    for (size_t ti = 0; ti < taus.size(); ++ti) {
      Eigen::Index cnt = 0;
      for (Eigen::Index i = 0; i < np; ++i)
        if (m.r(i, j) <= taus[ti]) ++cnt;
      rho[static_cast<size_t>(j)][ti] = static_cast<double>(cnt) / denom;
    }
  return rho;
}

}  // namespace nmtr::profiles

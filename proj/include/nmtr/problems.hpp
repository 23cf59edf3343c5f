#pragma once

#include "nmtr/types.hpp"

namespace nmtr::problems {

// Look up a registered problem. Scalable families accept a dimension (0 means
// the registry default); fixed-dimension entries reject any other n.
// Throws std::invalid_argument for unknown names or invalid dimensions.
Problem get_problem(const std::string& name, Eigen::Index n = 0);

// Suite tags: "table1" (the three two-dimensional benchmark problems),
// "classic" (the scalable standards), "all".
std::vector<Problem> list_suite(const std::string& tag);

std::vector<std::string> registered_names();

// JSON array of {name, dim, start, f_star?} for a suite.
std::string suite_json(const std::string& tag);

// Max over `points` pseudo-random points near x0 of
// ||g_fd - g|| / max(1, ||g||), central differences with
// h_i = 1e-6 * max(1, |x_i|). Deterministic for a fixed seed.
double gradient_check(const Problem& p, int points = 10, unsigned seed = 20240901);

}  // namespace nmtr::problems

#pragma once

#include <vector>

#include "copack/graphs.hpp"
#include "copack/symmat.hpp"

namespace copack {

/// Atoms of a finitely supported product measure: vertex indices with
/// nonnegative weights. In graph mode the support must be a stable set for
/// the measure to be dual-feasible.
struct WeightedConfig {
  std::vector<int> indices;
  std::vector<double> weights;

  WeightedConfig(std::vector<int> indices, std::vector<double> weights);
};

/// total_mass = (sum a_i)^2, diag_mass = sum a_i^2. Cauchy-Schwarz forces
/// total_mass <= |support| * diag_mass.
struct DualValue {
  double total_mass = 0.0;
  double diag_mass = 0.0;
};

DualValue dual_objective(const WeightedConfig& c);

/// Optimal value of the dual program over delta measures: the maximum of
/// (sum a)^2 with sum a^2 = 1 over stable supports, attained at uniform
/// weights on a maximum stable set; equals the stability number. Enumerates
/// maximal stable sets (Bron-Kerbosch); capped at 25 vertices.
double dual_optimum(const Graph& g);

/// Dual feasibility of the atom set: the positively weighted support is
/// stable in g and the diagonal mass is 1 (within 1e-9).
bool feasibility_check(const WeightedConfig& c, const Graph& g);

/// Extreme-ray membership for the completely positive cone: entrywise
/// nonnegative, numerically rank one, with a nonnegative rank-one factor.
bool is_cp_extreme(const Symmat& m);

/// |dkp_threshold - dual_optimum|: the finite no-duality-gap check.
double duality_gap_report(const Graph& g, double tol);

}  // namespace copack

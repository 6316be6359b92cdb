#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copack/kernels.hpp"
#include "copack/symmat.hpp"

namespace copack {

enum class CopVerdict { Copositive, NotCopositive };

/// Aggregate evidence gathered by the exact tester: how many principal
/// submatrices were examined, the smallest eigenvalue met, and any subsets
/// whose eigenvector positivity was too close to call (those are re-tested on
/// the simplex grid and flagged here).
struct CopCertificate {
  long submatrices_tested = 0;
  double min_eigenvalue = 0.0;
  struct Borderline {
    uint32_t subset_mask = 0;
    double eigenvalue = 0.0;
    bool grid_confirms_copositive = false;
  };
  std::vector<Borderline> borderline;
};

struct CopResult {
  CopVerdict verdict = CopVerdict::Copositive;
  std::optional<std::vector<double>> witness;  // a >= 0 with a^T K a < 0
  double witness_value = 0.0;
  std::optional<CopCertificate> certificate;
  bool heuristic = false;  // grid refuter cannot certify the Copositive verdict
};

/// Exact copositivity by the principal-submatrix criterion: K is copositive
/// iff no principal submatrix has an eigenvector with strictly positive
/// components and negative eigenvalue. Enumerates all 2^n - 1 subsets;
/// capped at n <= 18.
CopResult is_copositive_exact(const Symmat& k);

/// Minimizes a^T K a over the rational simplex grid with the given
/// denominator, polishes the best point by projected coordinate descent, and
/// refutes if the polished value drops below -1e-10. A Copositive verdict
/// from this routine is heuristic.
CopResult refute_copositive_grid(const Symmat& k, int resolution);

/// A point configuration whose kernel energy is negative: a violated
/// finite-configuration constraint, usable as a cutting plane.
struct CutConfig {
  PointConfig config;
  double energy = 0.0;
};

/// Searches for a configuration of n_points unit vectors with negative kernel
/// energy by projected gradient descent on the product of spheres, repeated
/// over independently seeded restarts (run concurrently, merged by minimum
/// energy). Returns the best configuration if its energy < -1e-7, else
/// nothing — a legitimate "no cut found within budget".
std::optional<CutConfig> separate_sphere(const PolyKernel& k, int n_points, int restarts,
                                         uint64_t seed);

inline constexpr double kCutEps = 1e-7;

}  // namespace copack

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "copack/copositivity.hpp"
#include "copack/kernels.hpp"

namespace copack {

enum class BoundMode { Delsarte, Copositive };
enum class BoundStatus { Optimal, Infeasible };

/// One kissing-number bound computation on S^{dim-1} with polynomial degree
/// `degree`. The profile constraint p(s) <= -1 is discretized on a uniform
/// grid over [-1, 1/2] including both endpoints.
struct KissingInstance {
  int dim = 3;
  int degree = 10;
  int grid_size = 2000;
  BoundMode mode = BoundMode::Delsarte;
  int max_iters = 50;  // cutting-plane iterations (copositive mode)
  int restarts = 32;   // separation restarts per configuration size
  int n_max = 0;       // configuration sweep bound; 0 means 4 * dim
  uint64_t seed = 0;

  int effective_n_max() const { return n_max > 0 ? n_max : 4 * dim; }
  void validate() const;
};

struct BoundReport {
  BoundStatus status = BoundStatus::Optimal;
  BoundMode mode = BoundMode::Delsarte;
  double bound = 0.0;
  bool certified = false;       // only Delsarte mode can certify
  int iterations = 0;           // LP solves performed
  double constraint_check = 0;  // max of p(s) + 1 over the 10x finer grid
  std::vector<double> trace;    // objective value after each LP solve
  std::vector<CutConfig> cuts;  // configuration cuts (copositive mode)
  // Coefficients of the final profile polynomial: Jacobi-basis coefficients
  // in Delsarte mode, monomial coefficients in copositive mode.
  std::vector<double> coefficients;
  KissingInstance instance;
};

/// Linear programming bound with the positive-definite (Schoenberg)
/// restriction: minimize 1 + sum g_k over g >= 0 with the grid constraint,
/// then re-verify on a 10x finer grid and inflate the polynomial until the
/// constraint holds there. The returned bound is certified when the final
/// finer-grid check passes 1e-7.
BoundReport delsarte_bound(const KissingInstance& inst);

/// Cutting-plane relaxation of the full copositivity constraint: monomial
/// coefficients, grid rows, one linear cut per stored configuration, and a
/// separation sweep over configuration sizes 2..n_max each iteration. Never
/// certified; intermediate values may fall below the true optimum.
BoundReport copositive_bound(const KissingInstance& inst);

/// Runs both modes on identical (dim, degree, grid); the copositive value
/// never exceeds the Delsarte value since every positive-definite profile
/// satisfies all configuration cuts. Returns (delsarte, copositive); NaN for
/// an infeasible mode.
std::pair<double, double> bound_relation_check(int dim, int degree, int grid, int budget_iters);

}  // namespace copack

#pragma once

#include <limits>
#include <string>
#include <vector>

namespace copack {

enum class Sense { Ge, Le, Eq };

inline constexpr double kNoBound = std::numeric_limits<double>::infinity();

struct LpRow {
  std::vector<double> a;
  Sense sense = Sense::Ge;
  double rhs = 0.0;
};

/// Small dense linear program: minimize objective . x subject to rows and
/// per-variable bounds. Bounds default to free on both sides.
struct LpProblem {
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> lower;  // -kNoBound when absent
  std::vector<double> upper;  // +kNoBound when absent

  explicit LpProblem(int n_vars = 0)
      : objective(n_vars, 0.0), lower(n_vars, -kNoBound), upper(n_vars, kNoBound) {}

  int n_vars() const { return static_cast<int>(objective.size()); }
  void add_row(std::vector<double> a, Sense sense, double rhs) {
    rows.push_back(LpRow{std::move(a), sense, rhs});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x;
  double objective = 0.0;
  std::vector<double> row_duals;       // per input row; >=0 for Ge, <=0 for Le, free for Eq
  double dual_objective = 0.0;         // computed from duals and bounds only
  double feasibility_residual = 0.0;
  double complementary_residual = 0.0;
  // Infeasibility certificate: per-row multipliers (same sign convention as
  // row_duals) whose aggregated row is contradictory; farkas_gap > 0 is the
  // certified violation.
  std::vector<double> farkas;
  double farkas_gap = 0.0;
  int pivots = 0;
  bool used_dual_form = false;
};

/// Two-phase dense simplex (Bland's rule fallback after 1000 degenerate
/// pivots). Problems with many rows and few variables are solved through
/// their LP dual internally; statuses and certificates are re-verified in the
/// original problem before being reported.
LpSolution solve_lp(const LpProblem& p);

namespace detail {
enum class LpRoute { Auto, Direct, Dual };
LpSolution solve_lp_routed(const LpProblem& p, LpRoute route);
}  // namespace detail

}  // namespace copack

#include "copack/kissing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "copack/errors.hpp"
#include "copack/lp.hpp"
#include "copack/rng.hpp"

namespace copack {

namespace {

constexpr double kCertTol = 1e-7;

std::vector<double> uniform_grid(int count) {
  std::vector<double> s(count);
  for (int j = 0; j < count; ++j)
    s[j] = -1.0 + 1.5 * static_cast<double>(j) / (count - 1);
  s.front() = -1.0;
  s.back() = 0.5;
  return s;
}

// 10x refinement that keeps the coarse nodes as a subset.
int fine_count(int grid_size) { return 10 * (grid_size - 1) + 1; }

double max_violation_jacobi(const JacobiBasis& basis, const std::vector<double>& g, int count) {
  double worst = -std::numeric_limits<double>::infinity();
  for (double s : uniform_grid(count)) {
    double p = 0.0;
    for (int k = 0; k <= basis.degree(); ++k) p += g[k] * basis.eval(k, s);
    worst = std::max(worst, p + 1.0);
  }
  return worst;
}

double max_violation_monomial(const PolyKernel& kernel, int count) {
  double worst = -std::numeric_limits<double>::infinity();
  for (double s : uniform_grid(count)) worst = std::max(worst, eval_kernel(kernel, s) + 1.0);
  return worst;
}

}  // namespace

void KissingInstance::validate() const {
  if (dim < 2) throw std::invalid_argument("KissingInstance: dim must be >= 2");
  if (degree < 0 || degree > 24)
    throw std::invalid_argument("KissingInstance: degree must be in [0, 24]");
  if (grid_size < 16) throw std::invalid_argument("KissingInstance: grid_size must be >= 16");
  if (max_iters < 1) throw std::invalid_argument("KissingInstance: max_iters must be >= 1");
  if (restarts < 1) throw std::invalid_argument("KissingInstance: restarts must be >= 1");
  if (n_max < 0) throw std::invalid_argument("KissingInstance: n_max must be >= 0");
}

BoundReport delsarte_bound(const KissingInstance& inst) {
  inst.validate();
  if (inst.mode != BoundMode::Delsarte)
    throw std::invalid_argument("delsarte_bound: instance mode is not Delsarte");

  BoundReport report;
  report.mode = BoundMode::Delsarte;
  report.instance = inst;

  const int d = inst.degree;
  JacobiBasis basis(inst.dim, d);

  LpProblem lp(d + 1);
  for (int k = 0; k <= d; ++k) {
    lp.lower[k] = 0.0;
    lp.objective[k] = 1.0;
  }
  for (double s : uniform_grid(inst.grid_size)) {
    std::vector<double> row(d + 1);
    for (int k = 0; k <= d; ++k) row[k] = basis.eval(k, s);
    lp.add_row(std::move(row), Sense::Le, -1.0);
  }

  LpSolution sol = solve_lp(lp);
  report.iterations = 1;
  if (sol.status == LpStatus::Infeasible) {
    report.status = BoundStatus::Infeasible;
    report.bound = std::numeric_limits<double>::quiet_NaN();
    report.constraint_check = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  if (sol.status != LpStatus::Optimal)
    throw NumericError("delsarte_bound: LP solve did not reach an optimum");

  std::vector<double> g = sol.x;
  report.trace.push_back(1.0 + sol.objective);

  // Re-verify on the nested 10x grid. A violation delta is repaired by
  // scaling the profile by 1/(1 - delta - margin), which stays inside the
  // nonnegative-coefficient cone, unlike a constant shift.
  const int fine = fine_count(inst.grid_size);
  const double delta = max_violation_jacobi(basis, g, fine);
  if (delta > kCertTol) {
    if (delta > 0.5)
      throw NumericError("delsarte_bound: discretization too coarse (violation " +
                         std::to_string(delta) + "); increase grid_size");
    const double scale = 1.0 / (1.0 - delta - kCertTol);
    for (auto& v : g) v *= scale;
  }

  double total = 0.0;
  for (double v : g) total += v;
  report.bound = 1.0 + total;
  report.constraint_check = max_violation_jacobi(basis, g, fine);
  report.certified = report.constraint_check <= kCertTol;
  report.coefficients = std::move(g);
  return report;
}

BoundReport copositive_bound(const KissingInstance& inst) {
  inst.validate();
  if (inst.mode != BoundMode::Copositive)
    throw std::invalid_argument("copositive_bound: instance mode is not Copositive");

  BoundReport report;
  report.mode = BoundMode::Copositive;
  report.instance = inst;
  report.certified = false;

  const int d = inst.degree;
  const auto grid = uniform_grid(inst.grid_size);

  // The one-point configuration seeds the cut pool; it pins p(1) >= 0 and
  // keeps the objective 1 + sum c_k bounded below by 1.
  {
    std::vector<double> e1(inst.dim, 0.0);
    e1[0] = 1.0;
    report.cuts.push_back(CutConfig{PointConfig(inst.dim, {e1}), 0.0});
  }

  auto cut_row = [&](const PointConfig& config) {
    const int n = config.size();
    std::vector<double> row(d + 1, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int c = 0; c < inst.dim; ++c) s += config.points[i][c] * config.points[j][c];
        s = std::clamp(s, -1.0, 1.0);
        double pw = 1.0;
        for (int k = 0; k <= d; ++k) {
          row[k] += pw;
          pw *= s;
        }
      }
    return row;
  };

  std::vector<double> coeffs;
  for (int iter = 0; iter < inst.max_iters; ++iter) {
    LpProblem lp(d + 1);
    for (int k = 0; k <= d; ++k) lp.objective[k] = 1.0;
    for (double s : grid) {
      std::vector<double> row(d + 1);
      double pw = 1.0;
      for (int k = 0; k <= d; ++k) {
        row[k] = pw;
        pw *= s;
      }
      lp.add_row(std::move(row), Sense::Le, -1.0);
    }
    for (const auto& cut : report.cuts) lp.add_row(cut_row(cut.config), Sense::Ge, 0.0);

    LpSolution sol = solve_lp(lp);
    ++report.iterations;
    if (sol.status == LpStatus::Infeasible) {
      report.status = BoundStatus::Infeasible;
      report.bound = std::numeric_limits<double>::quiet_NaN();
      report.constraint_check = std::numeric_limits<double>::quiet_NaN();
      return report;
    }
    if (sol.status != LpStatus::Optimal)
      throw NumericError("copositive_bound: LP solve did not reach an optimum");

    coeffs = sol.x;
    report.trace.push_back(1.0 + sol.objective);

    // Separation sweep over configuration sizes; seeds derive from
    // (instance seed, iteration, N) so reruns are bit-identical.
    const PolyKernel kernel(inst.dim, coeffs);
    bool found = false;
    for (int n_points = 2; n_points <= inst.effective_n_max(); ++n_points) {
      auto cut = separate_sphere(kernel, n_points, inst.restarts,
                                 mix_seed(inst.seed, static_cast<uint64_t>(iter) + 1,
                                          static_cast<uint64_t>(n_points)));
      if (cut) {
        report.cuts.push_back(std::move(*cut));
        found = true;
      }
    }
    if (!found) break;
  }

  report.bound = report.trace.back();
  report.coefficients = coeffs;
  report.constraint_check =
      max_violation_monomial(PolyKernel(inst.dim, coeffs), fine_count(inst.grid_size));
  return report;
}

std::pair<double, double> bound_relation_check(int dim, int degree, int grid, int budget_iters) {
  KissingInstance del;
  del.dim = dim;
  del.degree = degree;
  del.grid_size = grid;
  del.mode = BoundMode::Delsarte;

  KissingInstance cop = del;
  cop.mode = BoundMode::Copositive;
  cop.max_iters = budget_iters;

  const BoundReport dr = delsarte_bound(del);
  const BoundReport cr = copositive_bound(cop);
  const double dv =
      dr.status == BoundStatus::Optimal ? dr.bound : std::numeric_limits<double>::quiet_NaN();
  const double cv =
      cr.status == BoundStatus::Optimal ? cr.bound : std::numeric_limits<double>::quiet_NaN();
  return {dv, cv};
}

}  // namespace copack

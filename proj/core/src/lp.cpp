#include "copack/lp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "copack/errors.hpp"

namespace copack {
namespace {

constexpr double kFeasTol = 1e-9;   // phase-1 acceptance
constexpr double kOptTol = 1e-9;    // reduced-cost optimality
constexpr double kPivotTol = 1e-10; // smallest acceptable pivot element
constexpr int kBlandAfter = 1000;   // consecutive degenerate pivots

// Canonical form fed to the simplex engine:
//   min cost . x + offset   s.t.   rows . x >= rhs,  x >= 0.
struct NormForm {
  int n = 0;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> cost;
  double offset = 0.0;

  struct VarMap {
    int col = -1;
    int neg_col = -1;   // second column of a free split
    double shift = 0.0;
    bool negated = false;  // x = shift - x_hat (upper bound only)
  };
  std::vector<VarMap> vars;

  struct RowOrigin {
    int orig_row = -1;  // -1 for bound rows
    double sign = 1.0;
  };
  std::vector<RowOrigin> origins;
};

struct EngineResult {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x;       // structural values
  std::vector<double> y;       // duals, one per row (>= 0)
  std::vector<double> farkas;  // per row, infeasible case
  std::vector<double> ray;     // structural ray, unbounded case
  int pivots = 0;
};

void validate(const LpProblem& p) {
  const int n = p.n_vars();
  if (n < 1) throw std::invalid_argument("solve_lp: problem has no variables");
  if (static_cast<int>(p.lower.size()) != n || static_cast<int>(p.upper.size()) != n)
    throw std::invalid_argument("solve_lp: bound vectors do not match variable count");
  for (int j = 0; j < n; ++j) {
    if (std::isnan(p.objective[j]) || std::isinf(p.objective[j]))
      throw std::invalid_argument("solve_lp: non-finite objective coefficient");
    if (std::isnan(p.lower[j]) || std::isnan(p.upper[j]))
      throw std::invalid_argument("solve_lp: NaN bound");
  }
  for (const auto& r : p.rows) {
    if (static_cast<int>(r.a.size()) != n)
      throw std::invalid_argument("solve_lp: row length does not match variable count");
    if (!std::isfinite(r.rhs)) throw std::invalid_argument("solve_lp: non-finite rhs");
    for (double v : r.a)
      if (!std::isfinite(v)) throw std::invalid_argument("solve_lp: non-finite row entry");
  }
}

NormForm normalize(const LpProblem& p) {
  const int n = p.n_vars();
  NormForm f;
  f.vars.resize(n);

  int cols = 0;
  struct BoundRow {
    int col;
    double range;
  };
  std::vector<BoundRow> bound_rows;
  for (int j = 0; j < n; ++j) {
    auto& m = f.vars[j];
    const double lo = p.lower[j], hi = p.upper[j];
    if (lo > -kNoBound && hi < kNoBound) {
      m.col = cols++;
      m.shift = lo;
      bound_rows.push_back({m.col, hi - lo});  // x_hat <= hi - lo
    } else if (lo > -kNoBound) {
      m.col = cols++;
      m.shift = lo;
    } else if (hi < kNoBound) {
      m.col = cols++;
      m.shift = hi;
      m.negated = true;
    } else {
      m.col = cols++;
      m.neg_col = cols++;
    }
  }
  f.n = cols;

  f.cost.assign(cols, 0.0);
  for (int j = 0; j < n; ++j) {
    const auto& m = f.vars[j];
    const double c = p.objective[j];
    f.offset += c * m.shift;
    f.cost[m.col] += m.negated ? -c : c;
    if (m.neg_col >= 0) f.cost[m.neg_col] -= c;
  }

  auto push_row = [&](const LpRow& r, double sign, int orig_index) {
    std::vector<double> row(cols, 0.0);
    double rhs = r.rhs;
    for (int j = 0; j < n; ++j) {
      const double a = r.a[j];
      if (a == 0.0) continue;
      const auto& m = f.vars[j];
      rhs -= a * m.shift;
      row[m.col] += m.negated ? -a : a;
      if (m.neg_col >= 0) row[m.neg_col] -= a;
    }
    if (sign < 0) {
      for (auto& v : row) v = -v;
      rhs = -rhs;
    }
    f.rows.push_back(std::move(row));
    f.rhs.push_back(rhs);
    f.origins.push_back({orig_index, sign});
  };

  for (int i = 0; i < static_cast<int>(p.rows.size()); ++i) {
    const auto& r = p.rows[i];
    switch (r.sense) {
      case Sense::Ge:
        push_row(r, +1.0, i);
        break;
      case Sense::Le:
        push_row(r, -1.0, i);
        break;
      case Sense::Eq:  // handled as a >= / <= pair so duals stay readable
        push_row(r, +1.0, i);
        push_row(r, -1.0, i);
        break;
    }
  }
  for (const auto& br : bound_rows) {
    std::vector<double> row(cols, 0.0);
    row[br.col] = -1.0;
    f.rows.push_back(std::move(row));
    f.rhs.push_back(-br.range);
    f.origins.push_back({-1, 1.0});
  }
  return f;
}

// Full-tableau two-phase simplex on min c.x, A x >= b, x >= 0.
EngineResult simplex_engine(const std::vector<std::vector<double>>& rows,
                            const std::vector<double>& rhs, const std::vector<double>& cost,
                            int n) {
  const int m = static_cast<int>(rows.size());
  EngineResult res;
  if (m == 0) {
    // Feasible iff x = 0 works; objective improves along any negative cost.
    res.x.assign(n, 0.0);
    for (int j = 0; j < n; ++j)
      if (cost[j] < -kOptTol) {
        res.status = LpStatus::Unbounded;
        res.ray.assign(n, 0.0);
        res.ray[j] = 1.0;
        return res;
      }
    res.status = LpStatus::Optimal;
    return res;
  }

  // Row scaling: sigma flips rows so stored rhs is nonnegative. Slack column
  // for row i carries coefficient -sigma_i; flipped rows start with their
  // slack basic, the rest get artificials.
  std::vector<double> sigma(m, 1.0);
  int n_art = 0;
  std::vector<int> art_of_row(m, -1);
  for (int i = 0; i < m; ++i) {
    if (rhs[i] > 0) {
      sigma[i] = 1.0;
      art_of_row[i] = n_art++;
    } else {
      sigma[i] = -1.0;
    }
  }

  const int slack0 = n;
  const int art0 = n + m;
  const int width = n + m + n_art;
  if (static_cast<long long>(m) * width > 100000000LL)
    throw NumericError("solve_lp: tableau too large for the direct dense simplex (" +
                       std::to_string(m) + " rows x " + std::to_string(width) + " columns)");

  std::vector<double> T(static_cast<size_t>(m) * width, 0.0);
  std::vector<double> b(m);
  auto t = [&](int i, int j) -> double& { return T[static_cast<size_t>(i) * width + j]; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t(i, j) = sigma[i] * rows[i][j];
    t(i, slack0 + i) = -sigma[i];
    if (art_of_row[i] >= 0) t(i, art0 + art_of_row[i]) = 1.0;
    b[i] = sigma[i] * rhs[i];
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = art_of_row[i] >= 0 ? art0 + art_of_row[i] : slack0 + i;

  std::vector<double> obj_row(width, 0.0);
  double obj_val = 0.0;

  auto rebuild_obj = [&](const std::vector<double>& c) {
    for (int j = 0; j < width; ++j) obj_row[j] = j < static_cast<int>(c.size()) ? c[j] : 0.0;
    obj_val = 0.0;
    for (int i = 0; i < m; ++i) {
      const double cb = basis[i] < static_cast<int>(c.size()) ? c[basis[i]] : 0.0;
      if (cb == 0.0) continue;
      for (int j = 0; j < width; ++j) obj_row[j] -= cb * t(i, j);
      obj_val += cb * b[i];
    }
  };

  double b_scale = 1.0;
  for (int i = 0; i < m; ++i) b_scale = std::max(b_scale, std::abs(b[i]));

  int pivots = 0, degenerate_streak = 0;
  const long long pivot_cap = std::max(20000LL, 60LL * (m + n));
  double min_pivot_seen = kNoBound, max_pivot_seen = 0.0;

  std::vector<char> allowed(width, 1);

  // The tableau and objective row are updated incrementally per pivot, so
  // roundoff drifts with the pivot count. Exit decisions are therefore
  // re-checked: the objective row is re-derived before accepting optimality,
  // and an unbounded claim must verify as a ray against the original row
  // data. Split free variables make this essential: the column of x- while
  // x+ sits in the basis is exactly -e_row plus debris, an all-nonpositive
  // column whose true reduced cost is zero, and tolerance-level noise would
  // otherwise turn it into a fake unbounded direction.
  std::vector<char> debris(width, 0);  // columns whose claimed ray failed verification
  auto genuine_ray = [&](int enter, const std::vector<double>& active_cost) -> bool {
    std::vector<double> dx(n, 0.0), ds(m, 0.0);
    auto set_comp = [&](int col, double v) -> bool {
      if (col < n)
        dx[col] = v;
      else if (col < art0)
        ds[col - n] = v;
      else if (std::abs(v) > 1e-9)
        return false;  // an artificial would move
      return true;
    };
    if (!set_comp(enter, 1.0)) return false;
    for (int i = 0; i < m; ++i)
      if (!set_comp(basis[i], -t(i, enter))) return false;
    for (double v : dx)
      if (v < -1e-9) return false;
    for (double v : ds)
      if (v < -1e-9) return false;
    // Flow conservation against the original rows: rows.dx - ds = 0.
    for (int i = 0; i < m; ++i) {
      double acc = -ds[i], scale = 1.0;
      for (int j = 0; j < n; ++j) {
        acc += rows[i][j] * dx[j];
        scale = std::max(scale, std::abs(rows[i][j]));
      }
      if (std::abs(acc) > 1e-6 * scale) return false;
    }
    // The ray must genuinely improve the active objective. Phase 1 prices
    // only the pinned artificials, so its claims always fail here — the
    // artificial sum cannot descend along a feasible ray.
    double drop = 0.0;
    for (int j = 0; j < n && j < static_cast<int>(active_cost.size()); ++j)
      drop += active_cost[j] * dx[j];
    return drop < -kOptTol;
  };
  auto run_phase = [&](const std::vector<double>& active_cost) -> std::optional<LpStatus> {
    int pivots_at_rebuild = pivots;
    for (;;) {
      if (pivots - pivots_at_rebuild >= 128) {
        rebuild_obj(active_cost);
        pivots_at_rebuild = pivots;
      }
      const bool bland = degenerate_streak > kBlandAfter;
      int enter = -1;
      double best = -kOptTol;
      for (int j = 0; j < width; ++j) {
        if (!allowed[j] || debris[j]) continue;
        if (obj_row[j] < best) {
          best = obj_row[j];
          enter = j;
          if (bland) break;  // first improving index
        }
      }
      if (enter < 0) {
        if (pivots_at_rebuild != pivots) {
          rebuild_obj(active_cost);
          pivots_at_rebuild = pivots;
          continue;  // re-scan against the fresh row
        }
        return std::nullopt;  // optimal for this phase
      }

      // Ratio test; among near-minimal ratios prefer the largest pivot
      // element, then the smallest basis index (Bland: smallest index only).
      int leave = -1;
      double min_ratio = kNoBound, leave_pivot = 0.0;
      for (int i = 0; i < m; ++i) {
        const double piv = t(i, enter);
        if (piv <= kPivotTol) continue;
        const double ratio = b[i] / piv;
        if (leave < 0 || ratio < min_ratio - 1e-12) {
          leave = i;
          min_ratio = ratio;
          leave_pivot = piv;
          continue;
        }
        if (ratio > min_ratio + 1e-12) continue;
        min_ratio = std::min(min_ratio, ratio);
        const bool prefer = bland ? basis[i] < basis[leave]
                                  : (piv > leave_pivot * (1.0 + 1e-12) ||
                                     (std::abs(piv - leave_pivot) <= 1e-12 * piv &&
                                      basis[i] < basis[leave]));
        if (prefer) {
          leave = i;
          leave_pivot = piv;
        }
      }
      if (leave < 0) {
        if (pivots_at_rebuild != pivots) {
          rebuild_obj(active_cost);
          pivots_at_rebuild = pivots;
          continue;  // unbounded only if it survives a fresh objective row
        }
        if (!genuine_ray(enter, active_cost)) {
          debris[enter] = 1;  // noise column; retry with the rest
          continue;
        }
        return LpStatus::Unbounded;
      }

      const double piv = t(leave, enter);
      min_pivot_seen = std::min(min_pivot_seen, piv);
      max_pivot_seen = std::max(max_pivot_seen, piv);
      const double theta = b[leave] / piv;
      degenerate_streak = theta <= 1e-12 ? degenerate_streak + 1 : 0;

      const double inv = 1.0 / piv;
      for (int j = 0; j < width; ++j) t(leave, j) *= inv;
      t(leave, enter) = 1.0;
      b[leave] *= inv;
      for (int i = 0; i < m; ++i) {
        if (i == leave) continue;
        const double f = t(i, enter);
        if (f == 0.0) continue;
        for (int j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
        t(i, enter) = 0.0;
        b[i] -= f * b[leave];
        if (b[i] < 0 && b[i] > -1e-11) b[i] = 0.0;
      }
      {
        const double f = obj_row[enter];
        if (f != 0.0) {
          for (int j = 0; j < width; ++j) obj_row[j] -= f * t(leave, j);
          obj_row[enter] = 0.0;
          obj_val += f * b[leave];
        }
      }
      basis[leave] = enter;
      if (++pivots > pivot_cap)
        throw NumericError("solve_lp: simplex stalled after " + std::to_string(pivots) +
                           " pivots (objective " + std::to_string(obj_val) +
                           ", pivot magnitudes in [" + std::to_string(min_pivot_seen) + ", " +
                           std::to_string(max_pivot_seen) + "])");
    }
  };

  // Phase 1: minimize the artificial sum.
  if (n_art > 0) {
    std::vector<double> c1(width, 0.0);
    for (int j = art0; j < width; ++j) c1[j] = 1.0;
    rebuild_obj(c1);
    auto status = run_phase(c1);
    if (status) throw NumericError("solve_lp: phase 1 reported unbounded");
    if (obj_val > kFeasTol * (1.0 + b_scale)) {
      res.status = LpStatus::Infeasible;
      res.farkas.assign(m, 0.0);
      for (int i = 0; i < m; ++i) res.farkas[i] = std::max(0.0, obj_row[slack0 + i]);
      res.pivots = pivots;
      return res;
    }
    // Drive basic artificials (all at zero now) out of the basis.
    for (int i = 0; i < m; ++i) {
      if (basis[i] < art0) continue;
      int enter = -1;
      double best = 0.0;
      for (int j = 0; j < art0; ++j)
        if (std::abs(t(i, j)) > std::max(kPivotTol, best)) {
          best = std::abs(t(i, j));
          enter = j;
        }
      if (enter < 0) continue;  // redundant row; its entries outside artificials are zero
      const double piv = t(i, enter);
      const double inv = 1.0 / piv;
      for (int j = 0; j < width; ++j) t(i, j) *= inv;
      t(i, enter) = 1.0;
      b[i] *= inv;
      for (int r = 0; r < m; ++r) {
        if (r == i) continue;
        const double f = t(r, enter);
        if (f == 0.0) continue;
        for (int j = 0; j < width; ++j) t(r, j) -= f * t(i, j);
        t(r, enter) = 0.0;
        b[r] -= f * b[i];
      }
      basis[i] = enter;
    }
  }

  // Phase 2: artificial columns are frozen out.
  for (int j = art0; j < width; ++j) allowed[j] = 0;
  rebuild_obj(cost);
  degenerate_streak = 0;
  auto status = run_phase(cost);
  res.pivots = pivots;
  if (status == LpStatus::Unbounded) {
    // Recover the improving ray for certificate use.
    int enter = -1;
    double best = -kOptTol;
    for (int j = 0; j < width; ++j)
      if (allowed[j] && obj_row[j] < best) {
        bool blocked = false;
        for (int i = 0; i < m; ++i)
          if (t(i, j) > kPivotTol) {
            blocked = true;
            break;
          }
        if (!blocked) {
          best = obj_row[j];
          enter = j;
        }
      }
    res.status = LpStatus::Unbounded;
    res.ray.assign(n, 0.0);
    if (enter >= 0) {
      if (enter < n) res.ray[enter] = 1.0;
      for (int i = 0; i < m; ++i)
        if (basis[i] < n) res.ray[basis[i]] = -t(i, enter);
      for (auto& v : res.ray)
        if (std::abs(v) < 1e-13) v = 0.0;
    }
    return res;
  }

  res.status = LpStatus::Optimal;
  res.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = b[i];
  for (auto& v : res.x)
    if (v < 0 && v > -1e-11) v = 0.0;
  res.y.assign(m, 0.0);
  for (int i = 0; i < m; ++i) res.y[i] = std::max(0.0, obj_row[slack0 + i]);
  return res;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Residuals of a candidate optimal solution in the original problem space.
void fill_residuals(const LpProblem& p, LpSolution& s) {
  const int n = p.n_vars();
  double feas = 0.0, comp = 0.0;

  std::vector<double> reduced = p.objective;
  for (size_t i = 0; i < p.rows.size(); ++i) {
    const double y = s.row_duals[i];
    const double ax = dot(p.rows[i].a, s.x);
    const double res = ax - p.rows[i].rhs;
    const double sc = 1.0 + std::abs(p.rows[i].rhs);
    switch (p.rows[i].sense) {
      case Sense::Ge:
        feas = std::max(feas, -res / sc);
        break;
      case Sense::Le:
        feas = std::max(feas, res / sc);
        break;
      case Sense::Eq:
        feas = std::max(feas, std::abs(res) / sc);
        break;
    }
    comp = std::max(comp, std::abs(y * res) / sc);
    if (y != 0.0)
      for (int j = 0; j < n; ++j) reduced[j] -= y * p.rows[i].a[j];
  }
  for (int j = 0; j < n; ++j) {
    const double lo = p.lower[j], hi = p.upper[j];
    if (lo > -kNoBound) feas = std::max(feas, (lo - s.x[j]) / (1.0 + std::abs(lo)));
    if (hi < kNoBound) feas = std::max(feas, (s.x[j] - hi) / (1.0 + std::abs(hi)));
    const double z = reduced[j];
    const double zs = 1.0 + std::abs(p.objective[j]);
    if (lo <= -kNoBound && hi >= kNoBound) {
      comp = std::max(comp, std::abs(z) / zs);
    } else {
      double gap = kNoBound;
      if (lo > -kNoBound) gap = std::min(gap, std::abs(s.x[j] - lo));
      if (hi < kNoBound) gap = std::min(gap, std::abs(hi - s.x[j]));
      comp = std::max(comp, std::abs(z) * std::min(1.0, gap) / zs);
    }
  }
  s.feasibility_residual = feas;
  s.complementary_residual = comp;
}

LpSolution assemble_optimal(const LpProblem& p, const NormForm& f, const std::vector<double>& xhat,
                            const std::vector<double>& yhat, bool used_dual) {
  LpSolution s;
  s.status = LpStatus::Optimal;
  s.used_dual_form = used_dual;
  const int n = p.n_vars();
  s.x.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const auto& m = f.vars[j];
    double v = xhat[m.col];
    if (m.neg_col >= 0) v -= xhat[m.neg_col];
    s.x[j] = m.negated ? m.shift - v : m.shift + v;
  }
  s.row_duals.assign(p.rows.size(), 0.0);
  double dual_obj = f.offset;
  for (size_t r = 0; r < f.origins.size(); ++r) {
    dual_obj += yhat[r] * f.rhs[r];
    if (f.origins[r].orig_row >= 0) s.row_duals[f.origins[r].orig_row] += f.origins[r].sign * yhat[r];
  }
  s.dual_objective = dual_obj;
  s.objective = dot(p.objective, s.x);
  fill_residuals(p, s);
  return s;
}

LpSolution assemble_infeasible(const LpProblem& p, const NormForm& f,
                               const std::vector<double>& farkas_hat, bool used_dual) {
  LpSolution s;
  s.status = LpStatus::Infeasible;
  s.used_dual_form = used_dual;
  s.objective = std::numeric_limits<double>::quiet_NaN();
  s.farkas.assign(p.rows.size(), 0.0);
  double gap = 0.0;
  for (size_t r = 0; r < f.origins.size(); ++r) {
    gap += farkas_hat[r] * f.rhs[r];
    if (f.origins[r].orig_row >= 0) s.farkas[f.origins[r].orig_row] += f.origins[r].sign * farkas_hat[r];
  }
  s.farkas_gap = gap;
  return s;
}

bool verify_optimal(const LpSolution& s) {
  return s.feasibility_residual <= 1e-8 && s.complementary_residual <= 1e-7 &&
         std::abs(s.objective - s.dual_objective) <= 1e-7 * (1.0 + std::abs(s.objective));
}

LpSolution solve_direct(const LpProblem& p, const NormForm& f) {
  EngineResult er = simplex_engine(f.rows, f.rhs, f.cost, f.n);
  LpSolution s;
  switch (er.status) {
    case LpStatus::Optimal:
      s = assemble_optimal(p, f, er.x, er.y, false);
      if (!verify_optimal(s))
        throw NumericError("solve_lp: optimal basis failed verification (feasibility " +
                           std::to_string(s.feasibility_residual) + ", complementarity " +
                           std::to_string(s.complementary_residual) + ")");
      break;
    case LpStatus::Infeasible:
      s = assemble_infeasible(p, f, er.farkas, false);
      break;
    case LpStatus::Unbounded:
      s.status = LpStatus::Unbounded;
      s.objective = std::numeric_limits<double>::quiet_NaN();
      break;
  }
  s.pivots = er.pivots;
  return s;
}

// Solves min cost.x, rows.x >= rhs, x >= 0 through its LP dual
//   max rhs.y  s.t.  rows^T y <= cost, y >= 0,
// which has one engine row per structural variable — the right shape when
// rows vastly outnumber variables. Returns nullopt when the answer cannot be
// certified back in the original problem.
std::optional<LpSolution> solve_via_dual(const LpProblem& p, const NormForm& f) {
  const int m = static_cast<int>(f.rows.size());
  const int n = f.n;

  std::vector<std::vector<double>> drows(n, std::vector<double>(m, 0.0));
  std::vector<double> drhs(n), dcost(m);
  for (int j = 0; j < n; ++j) drhs[j] = -f.cost[j];
  for (int i = 0; i < m; ++i) {
    dcost[i] = -f.rhs[i];
    for (int j = 0; j < n; ++j) drows[j][i] = -f.rows[i][j];
  }

  EngineResult er = simplex_engine(drows, drhs, dcost, m);
  if (er.status == LpStatus::Optimal) {
    // Duals of the dual rows recover the primal point; the dual's solution
    // vector is the primal's dual vector.
    LpSolution s = assemble_optimal(p, f, er.y, er.x, true);
    s.pivots = er.pivots;
    if (!verify_optimal(s)) return std::nullopt;
    return s;
  }
  if (er.status == LpStatus::Unbounded) {
    // An unbounded dual ray is a Farkas certificate for the primal, provided
    // it verifies: r >= 0, rows^T r <= 0, rhs . r > 0.
    const auto& r = er.ray;
    if (r.empty()) return std::nullopt;
    double gap = 0.0, scale = 0.0;
    for (int i = 0; i < m; ++i) {
      if (r[i] < -1e-9) return std::nullopt;
      gap += r[i] * f.rhs[i];
      scale = std::max(scale, std::abs(r[i]));
    }
    if (!(gap > 1e-9 * (1.0 + scale))) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      double col = 0.0;
      for (int i = 0; i < m; ++i) col += f.rows[i][j] * r[i];
      if (col > 1e-7 * (1.0 + scale)) return std::nullopt;
    }
    LpSolution s = assemble_infeasible(p, f, r, true);
    s.pivots = er.pivots;
    return s;
  }
  return std::nullopt;  // dual infeasible: primal unbounded or infeasible
}

}  // namespace

namespace detail {

LpSolution solve_lp_routed(const LpProblem& p, LpRoute route) {
  validate(p);
  for (int j = 0; j < p.n_vars(); ++j)
    if (p.lower[j] > p.upper[j]) {
      LpSolution s;
      s.status = LpStatus::Infeasible;
      s.objective = std::numeric_limits<double>::quiet_NaN();
      s.farkas.assign(p.rows.size(), 0.0);
      return s;
    }
  NormForm f = normalize(p);
  const int m = static_cast<int>(f.rows.size());
  bool try_dual = route == LpRoute::Dual || (route == LpRoute::Auto && m >= 256 && m >= 3 * f.n);
  if (try_dual) {
    auto s = solve_via_dual(p, f);
    if (s) return *s;
  }
  return solve_direct(p, f);
}

}  // namespace detail

LpSolution solve_lp(const LpProblem& p) { return detail::solve_lp_routed(p, detail::LpRoute::Auto); }

}  // namespace copack

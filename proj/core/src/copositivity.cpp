#include "copack/copositivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "copack/errors.hpp"
#include "copack/lp.hpp"
#include "copack/parallel.hpp"
#include "copack/rng.hpp"

namespace copack {
namespace {

constexpr double kNegEig = -1e-10;    // eigenvalue counts as negative below this
constexpr double kStrictPos = 1e-10;  // eigenvector component counts as positive above this
constexpr int kExactCap = 18;

// Number of compositions of `resolution` into n nonnegative parts, saturated.
double composition_count(int n, int resolution) {
  double c = 1.0;
  for (int i = 1; i < n; ++i) c *= static_cast<double>(resolution + i) / i;
  return c;
}

// Largest grid denominator (at most 200) whose simplex grid stays enumerable
// for this dimension.
int borderline_resolution(int n) {
  for (int r : {200, 150, 120, 100, 80, 60, 48, 36, 24, 16, 12, 8}) {
    if (composition_count(n, r) <= 2e7) return r;
  }
  return 4;
}

std::vector<double> extend_witness(const std::vector<int>& subset, std::span<const double> sub_witness,
                                   int n) {
  std::vector<double> full(n, 0.0);
  for (size_t i = 0; i < subset.size(); ++i) full[subset[i]] = sub_witness[i];
  double vmax = 0.0;
  for (double v : full) vmax = std::max(vmax, v);
  if (vmax > 0)
    for (double& v : full) v /= vmax;
  return full;
}

// Does the span of the given (orthonormal) eigenvectors contain a strictly
// positive vector? Solved as a tiny LP: maximize t with V z >= t, |z| <= 1.
// Returns the combination when max t > 0.
std::optional<std::vector<double>> positive_vector_in_span(const Symmat& sub,
                                                           const SpectralDecomp& eig,
                                                           const std::vector<int>& members,
                                                           double* attained) {
  const int s = sub.size();
  const int g = static_cast<int>(members.size());
  LpProblem lp(g + 1);  // z_0..z_{g-1}, t
  for (int l = 0; l < g; ++l) {
    lp.lower[l] = -1.0;
    lp.upper[l] = 1.0;
  }
  lp.upper[g] = 1.0;
  lp.objective[g] = -1.0;  // maximize t
  for (int i = 0; i < s; ++i) {
    std::vector<double> row(g + 1, 0.0);
    for (int l = 0; l < g; ++l) row[l] = eig.vec(i, members[l]);
    row[g] = -1.0;
    lp.add_row(std::move(row), Sense::Ge, 0.0);
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  *attained = -sol.objective;
  if (*attained <= kStrictPos) return std::nullopt;
  std::vector<double> v(s, 0.0);
  for (int i = 0; i < s; ++i)
    for (int l = 0; l < g; ++l) v[i] += eig.vec(i, members[l]) * sol.x[l];
  return v;
}

}  // namespace

CopResult is_copositive_exact(const Symmat& k) {
  const int n = k.size();
  if (n > kExactCap)
    throw SizeCapError("is_copositive_exact: n = " + std::to_string(n) +
                       " exceeds the exact cap of 18; use the grid refuter");

  CopCertificate cert;
  cert.min_eigenvalue = kNoBound;
  struct PendingBorderline {
    std::vector<int> subset;
    uint32_t mask;
    double eigenvalue;
  };
  std::vector<PendingBorderline> pending;

  std::vector<int> subset;
  subset.reserve(n);
  const double scale = 1.0 + k.max_abs();

  // Subsets in ascending size via Gosper's hack: small witnesses first.
  for (int size = 1; size <= n; ++size) {
    uint32_t mask = (1u << size) - 1u;
    const uint32_t limit = 1u << n;
    while (mask < limit) {
      subset.clear();
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) subset.push_back(i);

      Symmat sub = k.principal_submatrix(subset);
      // An entrywise nonnegative submatrix cannot host a positive eigenvector
      // with negative eigenvalue.
      bool all_nonneg = true;
      for (int i = 0; i < size && all_nonneg; ++i)
        for (int j = i; j < size; ++j)
          if (sub(i, j) < 0) {
            all_nonneg = false;
            break;
          }
      if (!all_nonneg) {
        ++cert.submatrices_tested;
        SpectralDecomp eig = eig_sym(sub);
        cert.min_eigenvalue = std::min(cert.min_eigenvalue, eig.eigenvalues.front());
        for (int e = 0; e < size; ++e) {
          const double lambda = eig.eigenvalues[e];
          if (lambda >= kNegEig) break;  // ascending order
          double lo = kNoBound, hi = -kNoBound;
          for (int i = 0; i < size; ++i) {
            const double v = eig.vec(i, e);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
          }
          // Normalize sign so the vector leans positive.
          if (std::abs(lo) > hi) {
            std::swap(lo, hi);
            lo = -lo;
            hi = -hi;
          }
          if (lo > kStrictPos) {
            std::vector<double> w(size);
            double wmin = kNoBound;
            for (int i = 0; i < size; ++i) {
              w[i] = eig.vec(i, e);
              wmin = std::min(wmin, w[i]);
            }
            if (wmin < 0)
              for (auto& v : w) v = -v;
            CopResult res;
            res.verdict = CopVerdict::NotCopositive;
            res.witness = extend_witness(subset, w, n);
            res.witness_value = k.quad_form(*res.witness);
            res.certificate = cert;
            return res;
          }
          if (lo > -kStrictPos) {
            // Nonnegative but not strictly positive: too close to call.
            pending.push_back({subset, mask, lambda});
          }
        }
        // Repeated negative eigenvalues: positivity may hide in a rotation of
        // the eigenspace, so test the whole span.
        int e = 0;
        while (e < size && eig.eigenvalues[e] < kNegEig) {
          int e2 = e + 1;
          while (e2 < size && eig.eigenvalues[e2] < kNegEig &&
                 eig.eigenvalues[e2] - eig.eigenvalues[e] <= 1e-8 * scale)
            ++e2;
          if (e2 - e >= 2) {
            std::vector<int> members;
            for (int l = e; l < e2; ++l) members.push_back(l);
            double attained = 0.0;
            auto v = positive_vector_in_span(sub, eig, members, &attained);
            if (v) {
              CopResult res;
              res.verdict = CopVerdict::NotCopositive;
              res.witness = extend_witness(subset, *v, n);
              res.witness_value = k.quad_form(*res.witness);
              if (res.witness_value < kNegEig) {
                res.certificate = cert;
                return res;
              }
              // Positive combination exists but the form value is ambiguous.
              pending.push_back({subset, mask, eig.eigenvalues[e]});
            }
          }
          e = e2;
        }
      }

      // Gosper's hack: next mask with the same popcount.
      const uint32_t c = mask & (0u - mask);
      const uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }

  // Ambiguous subsets get a grid re-test and are flagged either way.
  for (const auto& p : pending) {
    Symmat sub = k.principal_submatrix(p.subset);
    CopResult grid = refute_copositive_grid(sub, borderline_resolution(static_cast<int>(p.subset.size())));
    if (grid.verdict == CopVerdict::NotCopositive) {
      CopResult res;
      res.verdict = CopVerdict::NotCopositive;
      res.witness = extend_witness(p.subset, *grid.witness, n);
      res.witness_value = k.quad_form(*res.witness);
      res.certificate = cert;
      return res;
    }
    cert.borderline.push_back({p.mask, p.eigenvalue, true});
  }

  if (cert.min_eigenvalue == kNoBound) cert.min_eigenvalue = 0.0;
  CopResult res;
  res.verdict = CopVerdict::Copositive;
  res.certificate = std::move(cert);
  return res;
}

CopResult refute_copositive_grid(const Symmat& k, int resolution) {
  if (resolution < 1) throw std::invalid_argument("refute_copositive_grid: resolution must be >= 1");
  const int n = k.size();
  if (composition_count(n, resolution) > 5e8)
    throw std::invalid_argument("refute_copositive_grid: grid too large; lower the resolution");

  std::vector<double> counts(n, 0.0), kdota(n, 0.0), best(n, 0.0);
  double best_val = kNoBound;

  // Depth-first over compositions of `resolution`, carrying K . counts.
  auto recurse = [&](auto&& self, int coord, int remaining) -> void {
    if (coord == n - 1) {
      counts[coord] += remaining;
      for (int j = 0; j < n; ++j) kdota[j] += remaining * k(coord, j);
      double val = 0.0;
      for (int j = 0; j < n; ++j) val += counts[j] * kdota[j];
      if (val < best_val) {
        best_val = val;
        best = counts;
      }
      counts[coord] -= remaining;
      for (int j = 0; j < n; ++j) kdota[j] -= remaining * k(coord, j);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      self(self, coord + 1, remaining - v);
      counts[coord] += 1.0;
      for (int j = 0; j < n; ++j) kdota[j] += k(coord, j);
    }
    counts[coord] -= remaining + 1.0;
    for (int j = 0; j < n; ++j) kdota[j] -= (remaining + 1.0) * k(coord, j);
  };
  recurse(recurse, 0, resolution);

  // Normalize onto the simplex.
  std::vector<double> a(n);
  for (int j = 0; j < n; ++j) a[j] = best[j] / resolution;

  // Polish by projected coordinate descent, renormalizing after each pass.
  std::vector<double> ka = k.multiply(a);
  double val = 0.0;
  for (int j = 0; j < n; ++j) val += a[j] * ka[j];
  for (int pass = 0; pass < 200; ++pass) {
    const double before = val;
    for (int i = 0; i < n; ++i) {
      const double kii = k(i, i);
      double step;
      if (kii > 1e-14)
        step = -ka[i] / kii;
      else if (ka[i] < -1e-14)
        step = 1.0;
      else if (ka[i] > 1e-14)
        step = -a[i];
      else
        continue;
      step = std::max(step, -a[i]);
      if (step == 0.0) continue;
      a[i] += step;
      for (int j = 0; j < n; ++j) ka[j] += step * k(i, j);
    }
    double total = 0.0;
    for (double v : a) total += v;
    if (total < 1e-12) {
      a.assign(n, 0.0);
      for (int j = 0; j < n; ++j) a[j] = best[j] / resolution;
      ka = k.multiply(a);
    } else {
      for (auto& v : a) v /= total;
      for (auto& v : ka) v /= total;
    }
    val = 0.0;
    for (int j = 0; j < n; ++j) val += a[j] * ka[j];
    if (before - val < 1e-15 * (1.0 + std::abs(val))) break;
  }

  CopResult res;
  if (val < kNegEig) {
    res.verdict = CopVerdict::NotCopositive;
    res.witness = a;
    res.witness_value = val;
    res.heuristic = false;
  } else {
    res.verdict = CopVerdict::Copositive;
    res.heuristic = true;
  }
  return res;
}

namespace {

struct Descent {
  std::vector<std::vector<double>> points;
  double energy = 0.0;
};

double pair_energy(const PolyKernel& k, const std::vector<std::vector<double>>& pts) {
  const int n = static_cast<int>(pts.size());
  const int dim = static_cast<int>(pts[0].size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += eval_kernel(k, 1.0);
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < dim; ++c) s += pts[i][c] * pts[j][c];
      acc += 2.0 * eval_kernel(k, std::clamp(s, -1.0, 1.0));
    }
  }
  return acc;
}

Descent run_descent(const PolyKernel& k, const PolyKernel& deriv, int n_points, Rng rng) {
  const int dim = k.dim;
  std::vector<std::vector<double>> pts(n_points);
  for (auto& p : pts) p = rng.unit_vector(dim);

  double energy = pair_energy(k, pts);
  std::vector<std::vector<double>> grad(n_points, std::vector<double>(dim, 0.0));
  std::vector<std::vector<double>> trial(n_points, std::vector<double>(dim, 0.0));

  for (int iter = 0; iter < 500; ++iter) {
    double grad_norm2 = 0.0;
    for (int i = 0; i < n_points; ++i) {
      std::fill(grad[i].begin(), grad[i].end(), 0.0);
      for (int j = 0; j < n_points; ++j) {
        if (j == i) continue;
        double s = 0.0;
        for (int c = 0; c < dim; ++c) s += pts[i][c] * pts[j][c];
        const double w = 2.0 * eval_kernel(deriv, std::clamp(s, -1.0, 1.0));
        for (int c = 0; c < dim; ++c) grad[i][c] += w * pts[j][c];
      }
      // Tangent projection at x_i.
      double xg = 0.0;
      for (int c = 0; c < dim; ++c) xg += grad[i][c] * pts[i][c];
      for (int c = 0; c < dim; ++c) grad[i][c] -= xg * pts[i][c];
      for (int c = 0; c < dim; ++c) grad_norm2 += grad[i][c] * grad[i][c];
    }
    if (std::sqrt(grad_norm2) < 1e-9) break;

    double step = 0.1;
    bool accepted = false;
    while (step >= 1e-16) {
      for (int i = 0; i < n_points; ++i) {
        double norm2 = 0.0;
        for (int c = 0; c < dim; ++c) {
          trial[i][c] = pts[i][c] - step * grad[i][c];
          norm2 += trial[i][c] * trial[i][c];
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int c = 0; c < dim; ++c) trial[i][c] *= inv;
      }
      const double trial_energy = pair_energy(k, trial);
      if (trial_energy <= energy - 1e-4 * step * grad_norm2) {
        pts.swap(trial);
        energy = trial_energy;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return {std::move(pts), energy};
}

}  // namespace

std::optional<CutConfig> separate_sphere(const PolyKernel& k, int n_points, int restarts,
                                         uint64_t seed) {
  if (n_points < 1) throw std::invalid_argument("separate_sphere: n_points must be >= 1");
  if (restarts < 1) throw std::invalid_argument("separate_sphere: restarts must be >= 1");

  const PolyKernel deriv(k.dim, derivative_coeffs(k.coeffs));
  std::vector<Descent> results(restarts);
  parallel_for(restarts, [&](int r) {
    results[r] = run_descent(k, deriv, n_points, Rng(mix_seed(seed, static_cast<uint64_t>(r))));
  });

  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (results[r].energy < results[best].energy) best = r;

  if (results[best].energy < -kCutEps)
    return CutConfig{PointConfig(k.dim, std::move(results[best].points)), results[best].energy};
  return std::nullopt;
}

}  // namespace copack

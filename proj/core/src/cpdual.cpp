#include "copack/cpdual.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "copack/errors.hpp"

namespace copack {

WeightedConfig::WeightedConfig(std::vector<int> indices_in, std::vector<double> weights_in)
    : indices(std::move(indices_in)), weights(std::move(weights_in)) {
  if (indices.size() != weights.size())
    throw std::invalid_argument("WeightedConfig: index/weight length mismatch");
  if (indices.empty()) throw std::invalid_argument("WeightedConfig: empty support");
  for (double a : weights)
    if (!std::isfinite(a) || a < 0)
      throw std::invalid_argument("WeightedConfig: weights must be finite and >= 0");
}

DualValue dual_objective(const WeightedConfig& c) {
  double sum = 0.0, sum2 = 0.0;
  for (double a : c.weights) {
    sum += a;
    sum2 += a * a;
  }
  return DualValue{sum * sum, sum2};
}

namespace {

// Bron-Kerbosch with pivoting over the non-adjacency relation: enumerates
// maximal stable sets, tracking only the maximum cardinality.
struct MaxStable {
  const Graph* g;
  uint64_t full;
  int best = 0;

  uint64_t stable_neighbors(int v) const { return ~g->adjacency_mask(v) & full & ~(uint64_t{1} << v); }

  void run(uint64_t r_count, uint64_t p, uint64_t x) {
    if (!p && !x) {
      best = std::max(best, static_cast<int>(r_count));
      return;
    }
    if (static_cast<int>(r_count) + std::popcount(p) <= best) return;
    // Pivot with the most candidates excluded.
    int pivot = -1, pivot_cover = -1;
    uint64_t scan = p | x;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int cover = std::popcount(p & stable_neighbors(v));
      if (cover > pivot_cover) {
        pivot_cover = cover;
        pivot = v;
      }
    }
    uint64_t ext = p & ~stable_neighbors(pivot);
    while (ext) {
      const int v = std::countr_zero(ext);
      ext &= ext - 1;
      const uint64_t bit = uint64_t{1} << v;
      run(r_count + 1, p & stable_neighbors(v), x & stable_neighbors(v));
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace

double dual_optimum(const Graph& g) {
  if (g.n() > 25)
    throw SizeCapError("dual_optimum: n = " + std::to_string(g.n()) + " exceeds the cap of 25");
  MaxStable search{&g, g.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n()) - 1};
  search.run(0, search.full, 0);
  // Over a stable support S with sum a^2 = 1, Cauchy-Schwarz caps (sum a)^2 at
  // |S|, attained by uniform weights 1/sqrt(|S|).
  return static_cast<double>(search.best);
}

bool feasibility_check(const WeightedConfig& c, const Graph& g) {
  std::vector<int> support;
  double diag = 0.0;
  for (size_t i = 0; i < c.indices.size(); ++i) {
    if (c.indices[i] < 0 || c.indices[i] >= g.n()) return false;
    diag += c.weights[i] * c.weights[i];
    if (c.weights[i] > 0) support.push_back(c.indices[i]);
  }
  if (std::abs(diag - 1.0) > 1e-9) return false;
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) return false;
  return g.is_stable_set(support);
}

bool is_cp_extreme(const Symmat& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (m(i, j) < -1e-10) return false;

  SpectralDecomp eig = eig_sym(m);
  const double lead = eig.eigenvalues[n - 1];
  if (lead <= 0) return false;
  // Rank one: every other singular value tiny relative to the largest.
  for (int k = 0; k < n - 1; ++k)
    if (std::abs(eig.eigenvalues[k]) > 1e-8 * lead) return false;

  // Factor a = sqrt(lead) v must be sign-normalizable to a >= 0.
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = eig.vec(i, n - 1);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = std::max(hi, -lo);
  return std::min(hi, -lo) <= 1e-7 * std::max(span, 1e-300);
}

double duality_gap_report(const Graph& g, double tol) {
  return std::abs(dkp_threshold(g, tol) - dual_optimum(g));
}

}  // namespace copack

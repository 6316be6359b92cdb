#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "copack/symmat.hpp"

namespace copack {

/// Finite simple undirected graph, 0-indexed, at most 64 vertices.
class Graph {
 public:
  explicit Graph(int n);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const { return (adj_[i] >> j) & 1u; }
  uint64_t adjacency_mask(int v) const { return adj_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool is_stable_set(const std::vector<int>& vertices) const;

  // DIMACS-like format: one `p edge <n> <m>` line, then `e <i> <j>` lines with
  // 1-indexed endpoints; `c` lines are comments. Anything else is rejected
  // with the offending line number.
  static Graph from_dimacs(std::istream& in);

 private:
  int n_;
  std::vector<uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Per-vertex nonnegative weights; one decimal per line in the file format.
std::vector<double> weights_from_stream(std::istream& in, int n);

/// Exact stability number by branch and bound with greedy clique-cover
/// pruning. Capped at 40 vertices.
int alpha(const Graph& g);

/// Exact maximum weight of a stable set. Capped at 30 vertices.
double alpha_weighted(const Graph& g, const std::vector<double>& w);

/// K_t = t(I + A) - J: diagonal and edge entries t-1, non-edge entries -1.
/// Copositive exactly when t is at least the stability number.
Symmat dkp_matrix(const Graph& g, double t);

/// Bisection of the exact copositivity test over t in [1, n], down to the
/// given interval width; returns the midpoint.
double dkp_threshold(const Graph& g, double tol);

/// Weighted variant: diagonal t - w_i, non-edges -sqrt(w_i w_j), edges
/// t - sqrt(w_i w_j); equals t(I + A) - sqrt(w) sqrt(w)^T.
Symmat weighted_dkp_matrix(const Graph& g, const std::vector<double>& w, double t);

/// Bisection over t in [max w_i, sum w_i].
double weighted_dkp_threshold(const Graph& g, const std::vector<double>& w, double tol);

}  // namespace copack

#include "copack/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "copack/copositivity.hpp"
#include "copack/errors.hpp"

namespace copack {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 1 || n > 64) throw std::invalid_argument("Graph: vertex count must be in [1, 64]");
}

void Graph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("Graph::add_edge: vertex out of range");
  if (i == j) throw std::invalid_argument("Graph::add_edge: loops are not allowed");
  if (has_edge(i, j)) throw std::invalid_argument("Graph::add_edge: duplicate edge");
  adj_[i] |= uint64_t{1} << j;
  adj_[j] |= uint64_t{1} << i;
  edges_.emplace_back(std::min(i, j), std::max(i, j));
}

bool Graph::is_stable_set(const std::vector<int>& vertices) const {
  for (size_t a = 0; a < vertices.size(); ++a)
    for (size_t b = a + 1; b < vertices.size(); ++b)
      if (has_edge(vertices[a], vertices[b])) return false;
  return true;
}

Graph Graph::from_dimacs(std::istream& in) {
  std::string line;
  long line_no = 0;
  int n = -1;
  long m_declared = -1, m_seen = 0;
  Graph g(1);
  while (std::getline(in, line)) {
    ++line_no;
    // Trim trailing carriage return from CRLF input.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError("duplicate problem line", line_no);
      std::string kind;
      long nn = 0, mm = 0;
      if (!(ls >> kind >> nn >> mm) || kind != "edge")
        throw ParseError("expected 'p edge <n> <m>'", line_no);
      if (nn < 1 || nn > 64) throw ParseError("vertex count out of range [1, 64]", line_no);
      if (mm < 0) throw ParseError("negative edge count", line_no);
      n = static_cast<int>(nn);
      m_declared = mm;
      g = Graph(n);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError("edge line before problem line", line_no);
      long a = 0, b = 0;
      if (!(ls >> a >> b)) throw ParseError("expected 'e <i> <j>'", line_no);
      if (a < 1 || b < 1 || a > n || b > n)
        throw ParseError("edge endpoint out of range", line_no);
      if (a == b) throw ParseError("loop edge", line_no);
      try {
        g.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
      } catch (const std::invalid_argument&) {
        throw ParseError("duplicate edge", line_no);
      }
      ++m_seen;
      continue;
    }
    throw ParseError("unrecognized line '" + tag + "'", line_no);
  }
  if (n < 0) throw ParseError("missing problem line", std::max(line_no, 1L));
  if (m_declared != m_seen)
    throw ParseError("edge count mismatch: declared " + std::to_string(m_declared) + ", found " +
                         std::to_string(m_seen),
                     line_no);
  return g;
}

std::vector<double> weights_from_stream(std::istream& in, int n) {
  std::vector<double> w;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    double v = 0.0;
    std::string extra;
    if (!(ls >> v) || (ls >> extra)) throw ParseError("expected one decimal weight", line_no);
    if (!std::isfinite(v) || v < 0) throw ParseError("weights must be finite and >= 0", line_no);
    w.push_back(v);
  }
  if (static_cast<int>(w.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " weights, found " +
                         std::to_string(w.size()),
                     std::max(line_no, 1L));
  return w;
}

namespace {

int popcount(uint64_t x) { return std::popcount(x); }

struct AlphaSearch {
  const Graph* g;
  int best = 0;

  // Greedy clique cover of the candidate set; a stable set meets each clique
  // at most once.
  int clique_cover_bound(uint64_t candidates) const {
    int cover = 0;
    uint64_t rem = candidates;
    while (rem) {
      ++cover;
      uint64_t avail = rem;
      while (avail) {
        const int v = std::countr_zero(avail);
        rem &= ~(uint64_t{1} << v);
        avail &= g->adjacency_mask(v);
        avail &= rem;
      }
    }
    return cover;
  }

  void run(uint64_t candidates, int current) {
    if (!candidates) {
      best = std::max(best, current);
      return;
    }
    if (current + clique_cover_bound(candidates) <= best) return;
    // Branch on the highest-degree candidate.
    int pick = -1, pick_deg = -1;
    uint64_t scan = candidates;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int deg = popcount(g->adjacency_mask(v) & candidates);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    const uint64_t bit = uint64_t{1} << pick;
    run(candidates & ~(g->adjacency_mask(pick) | bit), current + 1);
    run(candidates & ~bit, current);
  }
};

struct WeightedAlphaSearch {
  const Graph* g;
  const std::vector<double>* w;
  double best = 0.0;

  double clique_cover_bound(uint64_t candidates) const {
    double bound = 0.0;
    uint64_t rem = candidates;
    while (rem) {
      uint64_t avail = rem;
      double wmax = 0.0;
      while (avail) {
        const int v = std::countr_zero(avail);
        wmax = std::max(wmax, (*w)[v]);
        rem &= ~(uint64_t{1} << v);
        avail &= g->adjacency_mask(v);
        avail &= rem;
      }
      bound += wmax;
    }
    return bound;
  }

  void run(uint64_t candidates, double current) {
    best = std::max(best, current);
    if (!candidates) return;
    if (current + clique_cover_bound(candidates) <= best) return;
    int pick = -1, pick_deg = -1;
    uint64_t scan = candidates;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int deg = popcount(g->adjacency_mask(v) & candidates);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    const uint64_t bit = uint64_t{1} << pick;
    run(candidates & ~(g->adjacency_mask(pick) | bit), current + (*w)[pick]);
    run(candidates & ~bit, current);
  }
};

void check_weights(const Graph& g, const std::vector<double>& w) {
  if (static_cast<int>(w.size()) != g.n())
    throw std::invalid_argument("weights: length does not match vertex count");
  for (double v : w)
    if (!std::isfinite(v) || v < 0)
      throw std::invalid_argument("weights: entries must be finite and >= 0");
}

// Shared bisection: not copositive at lo, copositive at hi.
double bisect_threshold(double lo, double hi, double tol,
                        const std::function<Symmat(double)>& family) {
  auto copositive = [&](double t) {
    return is_copositive_exact(family(t)).verdict == CopVerdict::Copositive;
  };
  if (copositive(lo)) return lo;
  if (!copositive(hi))
    throw NumericError("threshold bisection: upper bracket t = " + std::to_string(hi) +
                       " is not copositive");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (copositive(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int alpha(const Graph& g) {
  if (g.n() > 40)
    throw SizeCapError("alpha: n = " + std::to_string(g.n()) + " exceeds the cap of 40");
  AlphaSearch search{&g};
  const uint64_t all = g.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n()) - 1;
  search.run(all, 0);
  return search.best;
}

double alpha_weighted(const Graph& g, const std::vector<double>& w) {
  if (g.n() > 30)
    throw SizeCapError("alpha_weighted: n = " + std::to_string(g.n()) + " exceeds the cap of 30");
  check_weights(g, w);
  WeightedAlphaSearch search{&g, &w};
  search.run((uint64_t{1} << g.n()) - 1, 0.0);
  return search.best;
}

Symmat dkp_matrix(const Graph& g, double t) {
  const int n = g.n();
  Symmat k(n);
  for (int i = 0; i < n; ++i) {
    k.set(i, i, t - 1.0);
    for (int j = i + 1; j < n; ++j) k.set(i, j, g.has_edge(i, j) ? t - 1.0 : -1.0);
  }
  return k;
}

double dkp_threshold(const Graph& g, double tol) {
  if (tol <= 0) throw std::invalid_argument("dkp_threshold: tol must be positive");
  return bisect_threshold(1.0, static_cast<double>(g.n()), tol,
                          [&](double t) { return dkp_matrix(g, t); });
}

Symmat weighted_dkp_matrix(const Graph& g, const std::vector<double>& w, double t) {
  check_weights(g, w);
  const int n = g.n();
  std::vector<double> s(n);
  for (int i = 0; i < n; ++i) s[i] = std::sqrt(w[i]);
  Symmat k(n);
  for (int i = 0; i < n; ++i) {
    k.set(i, i, t - w[i]);
    for (int j = i + 1; j < n; ++j)
      k.set(i, j, g.has_edge(i, j) ? t - s[i] * s[j] : -s[i] * s[j]);
  }
  return k;
}

double weighted_dkp_threshold(const Graph& g, const std::vector<double>& w, double tol) {
  if (tol <= 0) throw std::invalid_argument("weighted_dkp_threshold: tol must be positive");
  check_weights(g, w);
  double wmax = 0.0, wsum = 0.0;
  for (double v : w) {
    wmax = std::max(wmax, v);
    wsum += v;
  }
  if (wsum <= 0) return 0.0;  // all-zero weights: every stable set has weight 0
  return bisect_threshold(wmax, wsum, tol,
                          [&](double t) { return weighted_dkp_matrix(g, w, t); });
}

}  // namespace copack

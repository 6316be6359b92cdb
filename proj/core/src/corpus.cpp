#include "copack/corpus.hpp"

#include <algorithm>

#include "copack/rng.hpp"

namespace copack {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph grotzsch_graph() {
  // Mycielski construction over C5: outer cycle 0..4, shadows 5..9, hub 10.
  Graph g(11);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 4) % 5);
    g.add_edge(10, 5 + i);
  }
  return g;
}

Graph gnp_graph(int n, double p, uint64_t seed) {
  Graph g(n);
  Rng rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < p) g.add_edge(i, j);
  return g;
}

Graph circle_graph(int m) {
  Graph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int dist = std::min(j - i, m - (j - i));
      if (dist > 0 && 6 * dist < m) g.add_edge(i, j);
    }
  return g;
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> corpus;
  for (int n = 1; n <= 8; ++n) {
    corpus.push_back({"empty_" + std::to_string(n), empty_graph(n)});
    if (n >= 2) corpus.push_back({"complete_" + std::to_string(n), complete_graph(n)});
  }
  corpus.push_back({"C5", cycle_graph(5)});
  corpus.push_back({"C7", cycle_graph(7)});
  corpus.push_back({"petersen", petersen_graph()});
  corpus.push_back({"grotzsch", grotzsch_graph()});
  for (int i = 0; i < 20; ++i) {
    const int n = 4 + (i % 9);                // 4..12
    const double p = 0.25 + 0.05 * (i % 6);   // 0.25..0.50
    corpus.push_back({"gnp_" + std::to_string(i), gnp_graph(n, p, 0xC0FFEEULL + i)});
  }
  return corpus;
}

std::vector<WeightedInstance> weighted_corpus() {
  std::vector<WeightedInstance> out;
  for (int i = 0; i < 10; ++i) {
    const int n = 4 + (i % 5);  // 4..8
    const double p = 0.3 + 0.05 * (i % 4);
    Graph g = gnp_graph(n, p, 0xBEEF00ULL + i);
    Rng rng(0xFEED00ULL + i);
    std::vector<double> w(n);
    for (auto& v : w) v = 0.5 + 2.5 * rng.uniform01();
    out.push_back({"wgnp_" + std::to_string(i), std::move(g), std::move(w)});
  }
  return out;
}

}  // namespace copack

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copack/graphs.hpp"

namespace copack {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();
Graph grotzsch_graph();

// Seeded Erdos-Renyi G(n, p).
Graph gnp_graph(int n, double p, uint64_t seed);

// m equally spaced points on the circle; edges where the inner product lies
// in (1/2, 1), i.e. angular distance strictly below 60 degrees. The integer
// criterion 6 * distance < m keeps the threshold exact.
Graph circle_graph(int m);

struct CorpusEntry {
  std::string name;
  Graph graph;
};

// Fixed test corpus: empty and complete graphs up to n = 8, C5, C7, Petersen,
// Grotzsch, and 20 seed-pinned G(n, p) instances with n <= 12.
std::vector<CorpusEntry> standard_corpus();

struct WeightedInstance {
  std::string name;
  Graph graph;
  std::vector<double> weights;
};

// 10 seed-pinned weighted instances with n <= 8.
std::vector<WeightedInstance> weighted_corpus();

}  // namespace copack

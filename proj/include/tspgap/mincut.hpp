#pragma once

#include <vector>

#include "tspgap/errors.hpp"

namespace tspgap {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
};

struct GlobalCut {
    double weight = 0.0;
    std::vector<int> side;  // vertex ids of one shore, sorted
};

// Deterministic global minimum cut of an undirected weighted graph
// (Stoer-Wagner maximum adjacency search, O(V^3)). A disconnected graph
// yields weight 0 with one connected component as the side. Requires
// num_vertices >= 2 and nonnegative weights.
GlobalCut global_min_cut(int num_vertices, const std::vector<WeightedEdge>& edges);

}  // namespace tspgap

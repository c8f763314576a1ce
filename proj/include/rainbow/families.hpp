#pragma once

#include <cstdint>

#include "rainbow/graph.hpp"

namespace rainbow {

// Chain of blocks, each a pair of nonadjacent hubs joined to a completed
// clique: m inner blocks with clique size sigma2/2 - 1 between two outer
// blocks with clique size sigma2/2. Consecutive blocks are bridged by a
// single hub-to-hub edge. The two outer hubs realize the extremal distance.
struct Example1 {
    Graph graph;
    int terminal_a = 0;  // x_{0,1}
    int terminal_b = 0;  // x_{m+1,2}
};

Example1 example1(int sigma2, int m);

// Chain of cliques: m copies of K_{delta+1} between two copies of
// K_{delta+2}; each block loses its (x1, x2) edge and consecutive blocks
// are bridged x_{i,2} -- x_{i+1,1}.
Graph example2(int delta, int m);

// Connected random graph with sigma2 >= target, built by rejection
// sampling over min-degree-patched G(n, p). Deterministic for a seed.
Graph random_with_sigma2(int n, int target_sigma2, std::uint64_t seed);

// Corpus helper: plants a nonadjacent pair whose degree sum is exactly the
// target inside a denser random core, so sigma2 equals the target exactly.
Graph random_with_sigma2_exact(int n, int target_sigma2, std::uint64_t seed);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

}  // namespace rainbow

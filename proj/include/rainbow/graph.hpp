#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace rainbow {

// Execution policy for the data-parallel kernels (all-source BFS, pairwise
// verification). Serial is the reference implementation kept for testing;
// Parallel runs the same computation under OpenMP.
enum class Exec { Serial, Parallel };

// Simple undirected graph on dense vertex ids 0..n-1. Adjacency lists are
// kept sorted ascending; everything downstream relies on that for
// deterministic tie-breaking. Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Validates: n >= 1, ids in range, no self-loops, no parallel edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Edge list in canonical order: (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// min { d(u)+d(v) : uv not an edge }; empty when the graph is complete
// (including n = 1, which is vacuously complete).
using SigmaTwo = std::optional<int>;
SigmaTwo sigma2(const Graph& g);

// Partition of the reachable vertices by distance from a base set.
// layers[0] is the base itself; layers[k] is N^k(base).
struct LayerDecomposition {
    std::vector<int> base;                  // sorted
    std::vector<std::vector<int>> layers;   // layers[0] == base
    std::vector<int> depth;                 // depth[v] = k, or -1 if unreachable

    int max_depth() const { return static_cast<int>(layers.size()) - 1; }
    const std::vector<int>& layer(int k) const {
        static const std::vector<int> empty;
        return k < static_cast<int>(layers.size()) ? layers[k] : empty;
    }
};

LayerDecomposition bfs_layers(const Graph& g, const std::vector<int>& base);

struct GraphMetrics {
    bool connected = false;
    std::optional<int> diameter;        // set only when connected
    std::vector<int> eccentricities;    // empty when disconnected
    std::vector<int> pendants;          // vertices of degree 1
};

GraphMetrics graph_metrics(const Graph& g, Exec exec = Exec::Parallel);

// One BFS per source; the parallel version distributes sources over threads.
std::vector<int> eccentricities(const Graph& g, Exec exec);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;   // local id -> original id (ascending)
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Deterministic BFS tree from vertex 0; edges returned canonical.
std::vector<std::pair<int, int>> spanning_tree(const Graph& g);

bool is_connected(const Graph& g);

// Distances from a set of sources (multi-source BFS); -1 if unreachable.
std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources);

// Shortest path from v down into the set that `dist` was computed from,
// stepping through the smallest-id neighbor that decreases the distance.
// Returns v, ..., x with dist[x] == 0.
std::vector<int> descend_to_set(const Graph& g, const std::vector<int>& dist, int v);

}  // namespace rainbow

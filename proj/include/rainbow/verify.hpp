#pragma once

#include <optional>
#include <utility>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct Verdict {
    bool ok = false;
    std::pair<int, int> witness{-1, -1};  // a disconnected pair when !ok
};

struct VerifyOptions {
    Exec exec = Exec::Parallel;
    long long node_budget_per_pair = 20'000'000;  // search-size failsafe
};

// True iff every vertex pair is joined by a path whose edge colors are
// pairwise distinct. The coloring must be total on E(g).
Verdict is_rainbow_connected(const Graph& g, const EdgeColoring& col, VerifyOptions opt = {});

// True iff every vertex pair is joined by a path whose internal vertices
// are colored with pairwise distinct colors. An uncolored internal vertex
// invalidates a path.
Verdict is_rainbow_vertex_connected(const Graph& g, const VertexColoring& col,
                                    VerifyOptions opt = {});

// Single-pair probe: is there a rainbow path between u and v under col?
bool has_rainbow_path(const Graph& g, const EdgeColoring& col, int u, int v,
                      long long budget = 2'000'000);

struct OracleLimits {
    int max_edges = 16;
    int max_vertices = 10;
    double time_budget_s = 300.0;
};

// Exact rc / rvc by exhaustive search over canonicalized colorings
// (first use of color i precedes first use of i+1). Desk scale only.
int exact_rc(const Graph& g, OracleLimits limits = {});
int exact_rvc(const Graph& g, OracleLimits limits = {});

}  // namespace rainbow

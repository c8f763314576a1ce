#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/domset.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/report.hpp"

namespace rainbow {

// Fresh-color count for the random frontier coloring:
// sigma2 = 9..16 -> 63, 41, 27, 20, 16, 13, 11, 10; sigma2 >= 17 -> 9.
int palette_for_sigma2(int sigma2);

// The certified bound the pipeline enforces (the proof's |D|+|D1|+c
// accounting). The theorem-statement ranges differ at the margins; both
// are recorded in reports.
Rational rvc_bound(int n, int sigma2);
Rational rvc_statement_bound(int n, int sigma2);

// N^1(D) split by the quadratic neighbor threshold, and N^2(D) split by
// adjacency to the heavy side.
struct FrontierPartition {
    std::vector<int> d1, d2;  // partition of N^1(D)
    std::vector<int> l1, l2;  // partition of N^2(D)
    int threshold = 0;        // ceil((sigma2+2)^2/4 - 1)
};

FrontierPartition partition_frontier(const Graph& g, const DomSetAudit& d);

// Exact decision of e * c^(1-s) * ((1/4(sigma2+2)^2 - 2) s + 1) < 1 via
// interval arithmetic with directed rounding.
bool lll_condition(int sigma2, int s, int c);
std::string lll_condition_detail(int sigma2, int s, int c);

struct ResampleTrace {
    long long iterations = 0;
    std::vector<std::pair<int, std::vector<int>>> events;  // (vertex, resampled set)
};

struct ResampleResult {
    std::vector<int> color;  // color in [0, c) for d2 vertices, -1 elsewhere
    ResampleTrace trace;
};

// Moser-Tardos style resampler: random colors on d2, then while some l2
// vertex sees only one color among its d2 neighbors, re-randomize the
// colors of its lowest-id s-subset of d2 neighbors.
ResampleResult lll_resample(const Graph& g, const std::vector<int>& d2,
                            const std::vector<int>& l2, int s, int c, std::uint64_t seed,
                            long long cap = 1'000'000);

struct RvcResult {
    VertexColoring coloring;
    BoundReport report;
};

// Dispatch: complete -> no colors; sigma2 <= 8 -> distinctly colored tree
// interior; 9 <= sigma2 <= 27 -> sparsify, Stage 4, frontier split, random
// coloring with the table palette; sigma2 >= 28 -> same with Stage 3 and
// 9 colors. Output is verified on the original graph.
RvcResult color_rvc(const Graph& g, std::uint64_t seed);

}  // namespace rainbow

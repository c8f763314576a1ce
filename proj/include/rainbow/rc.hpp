#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/domset.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/report.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

// 6(n-2)/(sigma2+2) + 7, exactly.
Rational rc_bound(int n, int sigma2);

// Extends a rainbow coloring of G[D] to all of G with at most 6 fresh
// colors, for D a connected two-way two-step dominating set. The
// construction is a verifier-gated search: frontier vertices pick two
// dominated neighbors, dominated vertices pick a foot in D, a 3-typing of
// the dominated layer drives the fresh colors, and local repairs widen the
// choices until the verifier accepts.
EdgeColoring extend_rc_coloring(const Graph& g, const DomSetAudit& d, const EdgeColoring& base);

struct RcResult {
    EdgeColoring coloring;
    BoundReport report;
};

// Dispatch: complete graphs get one color; graphs with two or more
// pendants get a distinctly-colored spanning tree; everything else goes
// through Stage 1 -> Stage 2 -> tree coloring of G[D] -> extension.
RcResult color_rc(const Graph& g);

}  // namespace rainbow

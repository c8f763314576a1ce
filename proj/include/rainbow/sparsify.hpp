#pragma once

#include "rainbow/graph.hpp"

namespace rainbow {

// Connected spanning subgraph with the same sigma2 as the input and fewer
// than n*sigma2/2 + 2n/(sigma2+4) edges. Deletes the lowest-id edge whose
// removal keeps every nonadjacent degree sum at sigma2(g) or above, then
// re-adds deleted edges (lowest-id first) across components until
// connected. All three postconditions are certified before returning.
Graph sparsify(const Graph& g);

}  // namespace rainbow

#pragma once

#include "pmf/flow.hpp"

namespace pmf {

// Alternation numbers, indices, and excesses of an acyclic flow over a
// planar network's rotation system.  Only darts carrying positive flow are
// visible to the alternation count.
struct SaddleReport {
    std::vector<int> alpha;     // per vertex, even
    std::vector<int> index;     // alpha/2 - 1
    std::vector<Rat> excess;    // per vertex
    std::vector<VertexId> saddles;  // index >= 1
};

SaddleReport analyze_saddles(const FlowNetwork& net, const Flow& f);

// Verifies the face/vertex index identity of the positive-flow plane
// subgraph: per connected component, 2E = sum alpha(v) + sum alpha(face) and
// sum index(v) + sum index(face) = -2.  Test oracle only.
bool check_index_identity(const FlowNetwork& net, const Flow& f);

} // namespace pmf

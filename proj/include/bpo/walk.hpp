#pragma once

#include <vector>

#include "bpo/hypergraph.hpp"

namespace bpo {

// Signed closed walk v_1-e_1-v_2-...-v_k-e_k-v_1 with a sign per edge.
// Stored 0-based: nodes[i] = v_{i+1}, edges[i] = e_{i+1}, signs[i] in {+1,-1}.
struct SignedClosedWalk {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
    std::vector<int> signs;

    int length() const { return static_cast<int>(edges.size()); }
    // Odd number of '-' signs.
    bool is_odd() const;
};

// Checks k >= 3, v_i in e_{i-1} & e_i, and e_{i-1} & e_i & e_{i+1} empty for
// every cyclic index; throws InvalidWalk otherwise.
void validate_walk(const Hypergraph& g, const SignedClosedWalk& walk);
bool walk_is_valid(const Hypergraph& g, const SignedClosedWalk& walk);

// Same walk starting at position `offset` (0-based).
SignedClosedWalk rotate_walk(const SignedClosedWalk& walk, int offset);
SignedClosedWalk reverse_walk(const SignedClosedWalk& walk);

} // namespace bpo

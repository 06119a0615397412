#pragma once

#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "bpo/errors.hpp"

namespace bpo {

using NodeId = int;
using EdgeId = int;

// Sorted vector of distinct node ids; the canonical representation of a node set.
using NodeSet = std::vector<NodeId>;

NodeSet make_node_set(std::vector<NodeId> nodes);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
bool set_contains(const NodeSet& s, NodeId v);
bool sets_intersect(const NodeSet& a, const NodeSet& b);

// Immutable hypergraph: node ids are dense in [0, node_count), edges are distinct
// node sets of cardinality >= 2.  Pairwise edge intersections are indexed eagerly:
// each distinct nonempty set e&f gets a dense id, and the generating pairs are kept.
class Hypergraph {
public:
    Hypergraph(int node_count, std::vector<NodeSet> edge_sets);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const NodeSet& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<NodeSet>& edges() const { return edges_; }
    const std::vector<EdgeId>& edges_of_node(NodeId v) const { return node_to_edges_[v]; }

    // Edges sharing at least one node with e, ascending ids.
    const std::vector<EdgeId>& adjacent_edges(EdgeId e) const { return adjacent_edges_[e]; }

    int intersection_set_count() const { return static_cast<int>(intersection_sets_.size()); }
    const NodeSet& intersection_set(int id) const { return intersection_sets_[id]; }
    // Dense id of the set e&f, or nullopt when the edges are disjoint.
    std::optional<int> intersection_id(EdgeId e, EdgeId f) const;
    const NodeSet& intersection(EdgeId e, EdgeId f) const;
    // Unordered intersecting pairs (e < f) together with the id of e&f.
    const std::vector<std::tuple<EdgeId, EdgeId, int>>& intersecting_pairs() const {
        return intersecting_pairs_;
    }
    // Edges f for which some g != f has f&g equal to the given set.
    const std::vector<EdgeId>& set_generators(int set_id) const { return set_generators_[set_id]; }

private:
    int node_count_ = 0;
    std::vector<NodeSet> edges_;
    std::vector<std::vector<EdgeId>> node_to_edges_;
    std::vector<std::vector<EdgeId>> adjacent_edges_;
    std::vector<NodeSet> intersection_sets_;
    std::map<NodeSet, int> intersection_ids_;
    // Sorted by (e, f); doubles as the pair -> set id lookup via binary search.
    std::vector<std::tuple<EdgeId, EdgeId, int>> intersecting_pairs_;
    std::vector<std::vector<EdgeId>> set_generators_;
};

Hypergraph build_hypergraph(int node_count, const std::vector<NodeSet>& edge_sets);

// Ordered triples (e,f,g) with e&f != 0, f&g != 0 and e&f&g empty; both
// orientations are stored since the auxiliary graph consumes oriented patterns.
struct TripleSet {
    std::vector<std::array<EdgeId, 3>> triples;
};

TripleSet enumerate_triples(const Hypergraph& g);

// True iff the edges admit a cyclic ordering e_1..e_m (m >= 3) in which each edge
// intersects exactly its two neighbors; for m == 3 the triple intersection must be
// empty.  Returns the ordering as witness.
struct CycleHypergraphCheck {
    bool is_cycle = false;
    std::vector<EdgeId> ordering;
};

CycleHypergraphCheck is_cycle_hypergraph(const Hypergraph& g);

// Alternating sequence v_1,e_1,...,v_k,e_k closing back to v_1.
struct AlternatingSequence {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
};

// True iff nodes are distinct, edges are distinct, and each v_i lies in e_{i-1},
// e_i and in no other edge of the sequence.
bool is_beta_cycle(const Hypergraph& g, const AlternatingSequence& seq);

} // namespace bpo

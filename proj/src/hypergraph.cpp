#include "bpo/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bpo {

NodeSet make_node_set(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const NodeSet& s, NodeId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool sets_intersect(const NodeSet& a, const NodeSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

Hypergraph::Hypergraph(int node_count, std::vector<NodeSet> edge_sets)
    : node_count_(node_count) {
    edges_.reserve(edge_sets.size());
    std::set<NodeSet> seen;
    for (auto& raw : edge_sets) {
        NodeSet e = make_node_set(raw);
        if (e.size() < 2)
            throw LoopEdge("edge with fewer than 2 nodes: size " + std::to_string(e.size()));
        if (!e.empty() && (e.front() < 0 || e.back() >= node_count_))
            throw NodeOutOfRange("edge references node outside [0," +
                                 std::to_string(node_count_) + ")");
        if (!seen.insert(e).second)
            throw DuplicateEdge("duplicate edge set");
        edges_.push_back(std::move(e));
    }

    node_to_edges_.assign(node_count_, {});
    for (EdgeId e = 0; e < edge_count(); ++e)
        for (NodeId v : edges_[e])
            node_to_edges_[v].push_back(e);

    adjacent_edges_.assign(edge_count(), {});
    for (EdgeId e = 0; e < edge_count(); ++e) {
        for (EdgeId f = e + 1; f < edge_count(); ++f) {
            NodeSet cap = bpo::set_intersection(edges_[e], edges_[f]);
            if (cap.empty())
                continue;
            adjacent_edges_[e].push_back(f);
            adjacent_edges_[f].push_back(e);
            auto [it, inserted] =
                intersection_ids_.try_emplace(cap, static_cast<int>(intersection_sets_.size()));
            if (inserted)
                intersection_sets_.push_back(cap);
            intersecting_pairs_.emplace_back(e, f, it->second);
        }
        std::sort(adjacent_edges_[e].begin(), adjacent_edges_[e].end());
    }

    set_generators_.assign(intersection_sets_.size(), {});
    for (const auto& [e, f, sid] : intersecting_pairs_) {
        set_generators_[sid].push_back(e);
        set_generators_[sid].push_back(f);
    }
    for (auto& gens : set_generators_) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    }
}

std::optional<int> Hypergraph::intersection_id(EdgeId e, EdgeId f) const {
    if (e > f)
        std::swap(e, f);
    auto it = std::lower_bound(intersecting_pairs_.begin(), intersecting_pairs_.end(),
                               std::tuple<EdgeId, EdgeId, int>{e, f, -1});
    if (it == intersecting_pairs_.end() || std::get<0>(*it) != e || std::get<1>(*it) != f)
        return std::nullopt;
    return std::get<2>(*it);
}

const NodeSet& Hypergraph::intersection(EdgeId e, EdgeId f) const {
    static const NodeSet empty;
    auto id = intersection_id(e, f);
    return id ? intersection_sets_[*id] : empty;
}

Hypergraph build_hypergraph(int node_count, const std::vector<NodeSet>& edge_sets) {
    return Hypergraph(node_count, edge_sets);
}

TripleSet enumerate_triples(const Hypergraph& g) {
    TripleSet out;
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        const auto& nbrs = g.adjacent_edges(f);
        for (EdgeId e : nbrs) {
            for (EdgeId h : nbrs) {
                if (e == h)
                    continue;
                NodeSet ef = set_intersection(g.edge(e), g.edge(f));
                if (!sets_intersect(ef, g.edge(h)))
                    out.triples.push_back({e, f, h});
            }
        }
    }
    return out;
}

CycleHypergraphCheck is_cycle_hypergraph(const Hypergraph& g) {
    CycleHypergraphCheck res;
    const int m = g.edge_count();
    if (m < 3)
        return res;
    for (EdgeId e = 0; e < m; ++e)
        if (static_cast<int>(g.adjacent_edges(e).size()) != 2)
            return res;

    // Walk the adjacency 2-regular graph from edge 0; it must close into one cycle.
    std::vector<EdgeId> order;
    order.reserve(m);
    std::vector<bool> used(m, false);
    EdgeId prev = -1;
    EdgeId cur = 0;
    for (int step = 0; step < m; ++step) {
        order.push_back(cur);
        used[cur] = true;
        const auto& nbrs = g.adjacent_edges(cur);
        EdgeId next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
    }
    if (cur != 0)
        return res;
    for (bool u : used)
        if (!u)
            return res;
    if (m == 3) {
        NodeSet cap = set_intersection(g.edge(order[0]), g.edge(order[1]));
        if (sets_intersect(cap, g.edge(order[2])))
            return res;
    }
    res.is_cycle = true;
    res.ordering = std::move(order);
    return res;
}

bool is_beta_cycle(const Hypergraph& g, const AlternatingSequence& seq) {
    const int k = static_cast<int>(seq.nodes.size());
    if (k < 3 || static_cast<int>(seq.edges.size()) != k)
        return false;
    NodeSet nodes = seq.nodes;
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        return false;
    std::vector<EdgeId> edges = seq.edges;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        return false;
    for (int i = 0; i < k; ++i) {
        NodeId v = seq.nodes[i];
        EdgeId eprev = seq.edges[(i + k - 1) % k];
        EdgeId ecur = seq.edges[i];
        for (int j = 0; j < k; ++j) {
            bool member = set_contains(g.edge(seq.edges[j]), v);
            bool expected = (seq.edges[j] == eprev || seq.edges[j] == ecur);
            if (member != expected)
                return false;
        }
    }
    return true;
}

} // namespace bpo

#include "bpo/cuts.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bpo {

std::string to_string(CutFamily family) {
    switch (family) {
    case CutFamily::standard_1: return "standard-1";
    case CutFamily::standard_2: return "standard-2";
    case CutFamily::flower_1: return "flower-1";
    case CutFamily::flower_2: return "flower-2";
    case CutFamily::simple_odd_beta_cycle: return "simple-odd-beta-cycle";
    }
    return "?";
}

std::string serialize_cut(const Cut& cut) {
    std::ostringstream os;
    os << to_string(cut.family) << "; " << cut.bound << ";";
    for (auto [v, c] : cut.form.node_coeffs)
        os << " n" << v << ":" << c;
    os << ";";
    for (auto [e, c] : cut.form.edge_coeffs)
        os << " e" << e << ":" << c;
    os << "; c:" << cut.form.constant << ";";
    if (cut.witness.walk) {
        const auto& w = *cut.witness.walk;
        os << " walk=";
        for (int i = 0; i < w.length(); ++i)
            os << (i ? "," : "") << w.nodes[i] << ":" << w.edges[i] << ":"
               << (w.signs[i] > 0 ? '+' : '-');
    } else if (!cut.witness.neighbors.empty()) {
        os << " center=" << cut.witness.edge << " neighbors=";
        for (std::size_t i = 0; i < cut.witness.neighbors.size(); ++i)
            os << (i ? "," : "") << cut.witness.neighbors[i];
    } else {
        os << " edge=" << cut.witness.edge;
        if (cut.witness.node >= 0)
            os << " node=" << cut.witness.node;
    }
    return os.str();
}

std::vector<Cut> standard_cuts(const Hypergraph& g) {
    std::vector<Cut> cuts;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (NodeId v : g.edge(e)) {
            Cut cut;
            cut.family = CutFamily::standard_1;
            cut.form.add_node(v, 1);
            cut.form.add_edge(e, -1);
            cut.witness.edge = e;
            cut.witness.node = v;
            cuts.push_back(std::move(cut));
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Cut cut;
        cut.family = CutFamily::standard_2;
        cut.form.add_edge(e, 1);
        cut.form.constant = -1;
        for (NodeId v : g.edge(e)) {
            cut.form.add_node(v, -1);
            cut.form.constant += 1;
        }
        cut.witness.edge = e;
        cuts.push_back(std::move(cut));
    }
    return cuts;
}

Cut flower_cut(const Hypergraph& g, EdgeId center, const std::vector<EdgeId>& neighbors) {
    if (neighbors.empty() || neighbors.size() > 2)
        throw InvalidFlower("flower requires 1 or 2 neighbors");
    NodeSet covered;
    for (EdgeId e : neighbors) {
        if (e == center)
            throw InvalidFlower("neighbor equals center");
        if (!sets_intersect(g.edge(center), g.edge(e)))
            throw InvalidFlower("neighbor disjoint from center");
        covered = set_union(covered, g.edge(e));
    }
    if (neighbors.size() == 2) {
        if (neighbors[0] == neighbors[1])
            throw InvalidFlower("repeated neighbor");
        NodeSet cap01 = set_intersection(g.edge(neighbors[0]), g.edge(neighbors[1]));
        if (sets_intersect(cap01, g.edge(center)))
            throw InvalidFlower("neighbor intersections overlap inside the center");
    }
    Cut cut;
    cut.family = neighbors.size() == 1 ? CutFamily::flower_1 : CutFamily::flower_2;
    cut.form.add_edge(center, 1);
    cut.form.constant = -1;
    for (EdgeId e : neighbors) {
        cut.form.add_edge(e, -1);
        cut.form.constant += 1;
    }
    for (NodeId v : set_difference(g.edge(center), covered)) {
        cut.form.add_node(v, -1);
        cut.form.constant += 1;
    }
    cut.witness.edge = center;
    cut.witness.neighbors = neighbors;
    return cut;
}

LinearForm block_inc(const Hypergraph& g, EdgeId e, NodeId v) {
    if (!set_contains(g.edge(e), v))
        throw InvalidBlockArgs("inc: node not in edge");
    LinearForm s;
    s.add_node(v, 1);
    s.add_edge(e, -1);
    return s;
}

namespace {

bool subset_of(const NodeSet& a, const NodeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

LinearForm block_odd(const Hypergraph& g, EdgeId e, const NodeSet& u, const NodeSet& w) {
    if (u.empty() || w.empty() || !subset_of(u, g.edge(e)) || !subset_of(w, g.edge(e)) ||
        sets_intersect(u, w))
        throw InvalidBlockArgs("odd: U, W must be nonempty disjoint subsets of e");
    LinearForm s;
    s.add_edge(e, 2);
    s.constant = -1;
    for (NodeId v : u) {
        s.add_node(v, -1);
        s.constant += 1;
    }
    for (NodeId v : w) {
        s.add_node(v, -1);
        s.constant += 1;
    }
    for (NodeId v : set_difference(g.edge(e), set_union(u, w))) {
        s.add_node(v, -2);
        s.constant += 2;
    }
    return s;
}

LinearForm block_one(const Hypergraph& g, EdgeId e, const NodeSet& u, EdgeId f) {
    if (u.empty() || !subset_of(u, g.edge(e)) || sets_intersect(u, g.edge(f)) ||
        !sets_intersect(g.edge(e), g.edge(f)))
        throw InvalidBlockArgs("one: requires nonempty U in e, U & f empty, e & f nonempty");
    LinearForm s;
    s.add_edge(e, 2);
    s.constant = -1;
    for (NodeId v : u) {
        s.add_node(v, -1);
        s.constant += 1;
    }
    s.add_edge(f, -1);
    s.constant += 1;
    for (NodeId v : set_difference(g.edge(e), set_union(u, g.edge(f)))) {
        s.add_node(v, -2);
        s.constant += 2;
    }
    return s;
}

LinearForm block_two(const Hypergraph& g, EdgeId e, EdgeId f, EdgeId g_edge) {
    if (!sets_intersect(g.edge(e), g.edge(f)) || !sets_intersect(g.edge(e), g.edge(g_edge)) ||
        sets_intersect(set_intersection(g.edge(e), g.edge(f)), g.edge(g_edge)))
        throw InvalidBlockArgs("two: requires e & f, e & g nonempty and e & f & g empty");
    LinearForm s;
    s.add_edge(e, 2);
    s.constant = -1;
    s.add_edge(f, -1);
    s.constant += 1;
    s.add_edge(g_edge, -1);
    s.constant += 1;
    for (NodeId v : set_difference(g.edge(e), set_union(g.edge(f), g.edge(g_edge)))) {
        s.add_node(v, -2);
        s.constant += 2;
    }
    return s;
}

LinearForm length_function(const Hypergraph& g, const SignedClosedWalk& walk) {
    validate_walk(g, walk);
    const int k = walk.length();
    LinearForm total;
    for (int i = 0; i < k; ++i) {
        EdgeId eprev = walk.edges[(i + k - 1) % k];
        EdgeId ecur = walk.edges[i];
        EdgeId enext = walk.edges[(i + 1) % k];
        NodeId vcur = walk.nodes[i];
        NodeId vnext = walk.nodes[(i + 1) % k];
        int sp = walk.signs[(i + k - 1) % k];
        int sc = walk.signs[i];
        int sn = walk.signs[(i + 1) % k];
        if (sc > 0) {
            if (sp > 0)
                total += block_inc(g, ecur, vcur);
            if (sn > 0)
                total += block_inc(g, ecur, vnext);
        } else {
            if (sp < 0 && sn < 0) {
                total += block_odd(g, ecur, g.intersection(ecur, eprev),
                                   g.intersection(ecur, enext));
            } else if (sp < 0 && sn > 0) {
                total += block_one(g, ecur, g.intersection(ecur, eprev), enext);
            } else if (sp > 0 && sn < 0) {
                total += block_one(g, ecur, g.intersection(ecur, enext), eprev);
            } else {
                total += block_two(g, ecur, eprev, enext);
            }
        }
    }
    return total;
}

LinearForm combined_form(const Hypergraph& g, const SignedClosedWalk& walk) {
    validate_walk(g, walk);
    const int k = walk.length();
    LinearForm total;
    for (int i = 0; i < k; ++i) {
        EdgeId eprev = walk.edges[(i + k - 1) % k];
        EdgeId ecur = walk.edges[i];
        EdgeId enext = walk.edges[(i + 1) % k];
        int sp = walk.signs[(i + k - 1) % k];
        int sc = walk.signs[i];
        if (sc < 0) {
            total.add_edge(ecur, 2);
            total.constant += 1;
        } else {
            total.add_edge(ecur, -2);
        }
        if (sp > 0 && sc > 0)
            total.add_node(walk.nodes[i], 2);
        if (sp < 0 && sc < 0) {
            for (NodeId v : g.intersection(eprev, ecur)) {
                total.add_node(v, -2);
                total.constant += 2;
            }
            total.constant -= 2;
        }
        if (sc < 0) {
            for (NodeId v :
                 set_difference(g.edge(ecur), set_union(g.edge(eprev), g.edge(enext)))) {
                total.add_node(v, -2);
                total.constant += 2;
            }
        }
    }
    return total;
}

Cut simple_odd_beta_cycle_cut(const Hypergraph& g, const SignedClosedWalk& walk) {
    if (!walk.is_odd())
        throw EvenWalk("signed closed walk has an even number of negative signs");
    Cut cut;
    cut.form = length_function(g, walk);
    cut.bound = 1;
    cut.family = CutFamily::simple_odd_beta_cycle;
    cut.witness.walk = walk;
    return cut;
}

Cut cg_form(const Hypergraph& g, const SignedClosedWalk& walk) {
    if (!walk.is_odd())
        throw EvenWalk("signed closed walk has an even number of negative signs");
    LinearForm full = combined_form(g, walk);
    Cut cut;
    cut.family = CutFamily::simple_odd_beta_cycle;
    cut.witness.walk = walk;
    for (auto [v, c] : full.node_coeffs)
        cut.form.add_node(v, c / 2);
    for (auto [e, c] : full.edge_coeffs)
        cut.form.add_edge(e, c / 2);
    cut.bound = (1 - full.constant) / 2;
    return cut;
}

LinearForm cycle_hypergraph_form(const Hypergraph& g, const SignedClosedWalk& walk) {
    validate_walk(g, walk);
    const int k = walk.length();

    std::vector<EdgeId> support(walk.edges);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<NodeSet> support_sets;
    support_sets.reserve(support.size());
    for (EdgeId e : support)
        support_sets.push_back(g.edge(e));
    Hypergraph support_graph(g.node_count(), support_sets);
    if (!is_cycle_hypergraph(support_graph).is_cycle)
        throw NotCycleHypergraph("walk support is not a cycle hypergraph");

    std::set<EdgeId> neg_edges, pos_edges;
    for (int i = 0; i < k; ++i)
        (walk.signs[i] < 0 ? neg_edges : pos_edges).insert(walk.edges[i]);
    NodeSet neg_union, pos_union;
    for (EdgeId e : neg_edges)
        neg_union = set_union(neg_union, g.edge(e));
    for (EdgeId e : pos_edges)
        pos_union = set_union(pos_union, g.edge(e));
    NodeSet s1 = set_difference(neg_union, pos_union);
    NodeSet walk_nodes = make_node_set(walk.nodes);
    NodeSet s2 = set_difference(walk_nodes, neg_union);

    int neg_corners = 0;
    for (int i = 0; i < k; ++i)
        if (neg_edges.count(walk.edges[(i + k - 1) % k]) && neg_edges.count(walk.edges[i]))
            ++neg_corners;

    LinearForm total;
    for (NodeId v : s1)
        total.add_node(v, -2);
    for (EdgeId e : neg_edges)
        total.add_edge(e, 2);
    for (NodeId v : s2)
        total.add_node(v, 2);
    for (EdgeId e : pos_edges)
        total.add_edge(e, -2);
    total.constant = 2 * static_cast<long long>(s1.size()) - 2 * neg_corners +
                     static_cast<long long>(neg_edges.size());
    return total;
}

} // namespace bpo

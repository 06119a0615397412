#include "bpo/aux_graph.hpp"

#include <algorithm>
#include <cmath>

namespace bpo {

namespace {

struct PointSums {
    std::vector<double> edge_def; // per edge: sum_{v in e} (1 - z_v)
    std::vector<double> set_def;  // per intersection set: sum_{v in S} (1 - z_v)
};

PointSums point_sums(const Hypergraph& g, const DensePoint& z) {
    PointSums sums;
    sums.edge_def.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        double d = 0.0;
        for (NodeId v : g.edge(e))
            d += 1.0 - z.node_vals[v];
        sums.edge_def[e] = d;
    }
    sums.set_def.resize(g.intersection_set_count());
    for (int s = 0; s < g.intersection_set_count(); ++s) {
        double d = 0.0;
        for (NodeId v : g.intersection_set(s))
            d += 1.0 - z.node_vals[v];
        sums.set_def[s] = d;
    }
    return sums;
}

} // namespace

void require_in_flower_relaxation(const Hypergraph& g, const DensePoint& z, double feas_tol) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (z.node_vals[v] < -feas_tol || z.node_vals[v] > 1.0 + feas_tol)
            throw PointNotInFlowerRelaxation("node variable " + std::to_string(v) +
                                             " outside [0,1]");
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (z.edge_vals[e] < -feas_tol || z.edge_vals[e] > 1.0 + feas_tol)
            throw PointNotInFlowerRelaxation("edge variable " + std::to_string(e) +
                                             " outside [0,1]");
    PointSums sums = point_sums(g, z);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (NodeId v : g.edge(e))
            if (z.node_vals[v] - z.edge_vals[e] < -feas_tol)
                throw PointNotInFlowerRelaxation(
                    "z_v - z_e >= 0 violated for node " + std::to_string(v) + ", edge " +
                    std::to_string(e));
        if (z.edge_vals[e] - 1.0 + sums.edge_def[e] < -feas_tol)
            throw PointNotInFlowerRelaxation("linearization lower bound violated for edge " +
                                             std::to_string(e));
    }
    // Flowers with one and two neighbors.
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        const auto& nbrs = g.adjacent_edges(f);
        const double base = z.edge_vals[f] - 1.0 + sums.edge_def[f];
        std::vector<std::pair<EdgeId, int>> nbr_sets;
        nbr_sets.reserve(nbrs.size());
        for (EdgeId a : nbrs)
            nbr_sets.emplace_back(a, *g.intersection_id(f, a));
        for (std::size_t i = 0; i < nbr_sets.size(); ++i) {
            auto [a, sa] = nbr_sets[i];
            double one = base + (1.0 - z.edge_vals[a]) - sums.set_def[sa];
            if (one < -feas_tol)
                throw PointNotInFlowerRelaxation("flower at edge " + std::to_string(f) +
                                                 " with neighbor " + std::to_string(a) +
                                                 " violated by " + std::to_string(-one));
            for (std::size_t j = i + 1; j < nbr_sets.size(); ++j) {
                auto [b, sb] = nbr_sets[j];
                if (sets_intersect(g.intersection_set(sa), g.intersection_set(sb)))
                    continue;
                double two = one + (1.0 - z.edge_vals[b]) - sums.set_def[sb];
                if (two < -feas_tol)
                    throw PointNotInFlowerRelaxation(
                        "flower at edge " + std::to_string(f) + " with neighbors " +
                        std::to_string(a) + "," + std::to_string(b) + " violated by " +
                        std::to_string(-two));
            }
        }
    }
}

AuxGraph::AuxGraph(const Hypergraph& g, const TripleSet& triples, const DensePoint& z,
                   double feas_tol)
    : graph_(&g), point_(z) {
    require_in_flower_relaxation(g, z, feas_tol);
    n_ = g.node_count();
    s_ = g.intersection_set_count();
    m_ = g.edge_count();

    PointSums sums = point_sums(g, z);
    const auto sid_of = [&g](EdgeId a, EdgeId b) { return *g.intersection_id(a, b); };

    // Candidate minima per unordered endpoint pattern; ties by lexicographically
    // smallest witness triple (e, f, g).
    struct Best {
        double len = 0.0;
        EdgeId e = -1, f = -1, g = -1;
    };
    std::map<std::pair<int, int>, Best> odd_best;  // (sid_u, sid_w), sid_u < sid_w
    std::map<std::pair<int, int>, Best> two_best;  // (edge_a, edge_b), a < b
    std::map<std::pair<int, int>, Best> one_best;  // (edge_a, sid_u)

    auto consider = [](std::map<std::pair<int, int>, Best>& best, std::pair<int, int> key,
                       double len, EdgeId we, EdgeId wf, EdgeId wg) {
        auto [it, inserted] = best.try_emplace(key, Best{len, we, wf, wg});
        if (inserted)
            return;
        Best& cur = it->second;
        if (len < cur.len - 1e-15 ||
            (len <= cur.len + 1e-15 &&
             std::tuple(we, wf, wg) < std::tuple(cur.e, cur.f, cur.g))) {
            cur = Best{len, we, wf, wg};
        }
    };

    for (const auto& t : triples.triples) {
        EdgeId e = t[0], f = t[1], h = t[2];
        int sid_ef = sid_of(e, f);
        int sid_fh = sid_of(f, h);
        const double zf2 = 2.0 * z.edge_vals[f] - 1.0;
        const double tf = 2.0 * sums.edge_def[f];

        // s_odd(f, e&f, f&h): joins the two set nodes.
        if (!sets_intersect(g.intersection_set(sid_ef), g.intersection_set(sid_fh))) {
            double len = zf2 + tf - sums.set_def[sid_ef] - sums.set_def[sid_fh];
            std::pair<int, int> key = sid_ef < sid_fh ? std::pair{sid_ef, sid_fh}
                                                      : std::pair{sid_fh, sid_ef};
            consider(odd_best, key, len, std::min(e, h), f, std::max(e, h));
        }

        // s_two(f, e, h): joins the two edge nodes e and h.
        {
            double len = zf2 + (1.0 - z.edge_vals[e]) + (1.0 - z.edge_vals[h]) + tf -
                         2.0 * sums.set_def[sid_ef] - 2.0 * sums.set_def[sid_fh];
            std::pair<int, int> key{std::min(e, h), std::max(e, h)};
            consider(two_best, key, len, std::min(e, h), f, std::max(e, h));
        }

        // s_one(f, f&h, e): joins edge node e with set node f&h.
        {
            double len = zf2 + (1.0 - z.edge_vals[e]) + tf - sums.set_def[sid_fh] -
                         2.0 * sums.set_def[sid_ef];
            consider(one_best, {e, sid_fh}, len, e, f, h);
        }
    }

    auto clamp_len = [](double len) {
        if (len < -1e-6)
            throw PointNotInFlowerRelaxation("negative auxiliary edge length " +
                                             std::to_string(len));
        return std::max(len, 0.0);
    };

    for (const auto& [key, best] : odd_best) {
        double len = clamp_len(best.len);
        for (int s : {1, -1})
            edges_.push_back(Edge{snode(key.first, s), snode(key.second, -s), len,
                                  AuxFamily::odd, best.f, best.e, best.g});
    }
    for (const auto& [key, best] : two_best) {
        double len = clamp_len(best.len);
        for (int s : {1, -1})
            edges_.push_back(Edge{enode(key.first, s), enode(key.second, -s), len,
                                  AuxFamily::two, best.f, best.e, best.g});
    }
    for (const auto& [key, best] : one_best) {
        double len = clamp_len(best.len);
        for (int s : {1, -1})
            edges_.push_back(Edge{enode(key.first, s), snode(key.second, -s), len,
                                  AuxFamily::one, best.f, best.e, best.g});
    }
    for (EdgeId e = 0; e < m_; ++e)
        for (NodeId v : g.edge(e)) {
            double len = clamp_len(z.node_vals[v] - z.edge_vals[e]);
            for (int s : {1, -1})
                edges_.push_back(Edge{vnode(v, s), enode(e, s), len, AuxFamily::inc, -1, -1, -1});
        }

    // CSR adjacency over both endpoints.
    adj_offsets_.assign(aux_node_count() + 1, 0);
    for (const Edge& edge : edges_) {
        ++adj_offsets_[edge.u + 1];
        ++adj_offsets_[edge.v + 1];
    }
    for (std::size_t i = 1; i < adj_offsets_.size(); ++i)
        adj_offsets_[i] += adj_offsets_[i - 1];
    adj_arcs_.resize(2 * edges_.size());
    std::vector<int> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (int idx = 0; idx < edge_count(); ++idx) {
        adj_arcs_[fill[edges_[idx].u]++] = idx;
        adj_arcs_[fill[edges_[idx].v]++] = idx;
    }
}

AuxGraph build_aux_graph(const Hypergraph& g, const TripleSet& triples, const DensePoint& z,
                         double feas_tol) {
    return AuxGraph(g, triples, z, feas_tol);
}

} // namespace bpo

#include "bpo/separation.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <thread>

namespace bpo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DijkstraBuffers {
    std::vector<double> dist;
    std::vector<int> pred_arc; // arc used to reach the node, -1 at source
    std::vector<int> pred_node;
};

// Single-source shortest path to the twin of `source`; nonnegative lengths,
// binary heap, deterministic tie handling by (distance, node id) pops.
bool dijkstra_to_twin(const AuxGraph& aux, int source, double cutoff, DijkstraBuffers& buf,
                      double* out_dist) {
    const int n = aux.aux_node_count();
    const int target = aux.twin(source);
    buf.dist.assign(n, kInf);
    buf.pred_arc.assign(n, -1);
    buf.pred_node.assign(n, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    buf.dist[source] = 0.0;
    heap.push({0.0, source});
    const auto& offsets = aux.adjacency_offsets();
    const auto& arcs = aux.adjacency_arcs();
    const auto& edges = aux.edges();
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > buf.dist[u])
            continue;
        if (u == target) {
            *out_dist = d;
            return true;
        }
        for (int a = offsets[u]; a < offsets[u + 1]; ++a) {
            const AuxGraph::Edge& edge = edges[arcs[a]];
            int v = edge.u == u ? edge.v : edge.u;
            double nd = d + edge.length;
            if (nd >= cutoff || nd >= buf.dist[v])
                continue;
            buf.dist[v] = nd;
            buf.pred_arc[v] = arcs[a];
            buf.pred_node[v] = u;
            heap.push({nd, v});
        }
    }
    *out_dist = buf.dist[target];
    return std::isfinite(buf.dist[target]);
}

TwinPath extract_path(const DijkstraBuffers& buf, int source, int target) {
    TwinPath path;
    path.source = source;
    path.target = target;
    path.total_length = buf.dist[target];
    for (int v = target; v != source; v = buf.pred_node[v])
        path.arcs.push_back(buf.pred_arc[v]);
    std::reverse(path.arcs.begin(), path.arcs.end());
    return path;
}

} // namespace

namespace {

// Case analysis over the traversed arcs; structural inconsistencies throw,
// Definition-1 validation is left to the caller.
SignedClosedWalk reconstruct_sequence(const AuxGraph& aux, const TwinPath& path) {
    const Hypergraph& g = aux.graph();
    if (path.arcs.empty() || aux.twin(path.source) != path.target)
        throw MalformedPath("endpoints are not twins");

    // Walk pieces under construction; node slots are 1-based with slot k+1
    // wrapping onto v_1.
    std::vector<EdgeId> edges;
    std::vector<int> signs;
    std::map<int, NodeId> node_at;
    int i = 1;

    auto set_node = [&node_at](int slot, NodeId v) {
        auto [it, inserted] = node_at.try_emplace(slot, v);
        if (!inserted && it->second != v)
            throw MalformedPath("conflicting corner node assignment");
    };
    auto emit = [&edges, &signs, &i](EdgeId e, int sign) {
        edges.push_back(e);
        signs.push_back(sign);
        ++i;
    };
    auto lowest = [](const NodeSet& s) {
        if (s.empty())
            throw MalformedPath("empty witness intersection");
        return s.front();
    };

    bool pending = false;   // at an edge node whose + walk edge is not yet emitted
    bool wrap_mode = false; // start edge node closes the walk as e_k

    int cur = path.source;
    const AuxGraph::Edge& first = aux.edges()[path.arcs.front()];
    if (aux.is_vnode(cur)) {
        set_node(1, aux.vnode_payload(cur));
    } else if (aux.is_enode(cur)) {
        if (first.family == AuxFamily::inc)
            pending = true;
        else
            wrap_mode = true;
    }

    for (int arc : path.arcs) {
        const AuxGraph::Edge& edge = aux.edges()[arc];
        int nxt = edge.u == cur ? edge.v : edge.u;
        switch (edge.family) {
        case AuxFamily::inc: {
            if (aux.is_enode(cur)) {
                // e -> v: the + edge is pending exactly on (-,+,...) corners.
                if (pending) {
                    emit(aux.enode_payload(cur), +1);
                    pending = false;
                }
                set_node(i, aux.vnode_payload(nxt));
            } else {
                // v -> e closes walk edge i.
                emit(aux.enode_payload(nxt), +1);
                pending = false;
            }
            break;
        }
        case AuxFamily::one: {
            EdgeId f = edge.witness_middle;
            if (aux.is_enode(cur)) {
                EdgeId a = aux.enode_payload(cur);
                if (pending) {
                    emit(a, +1);
                    pending = false;
                }
                set_node(i, lowest(g.intersection(a, f)));
                emit(f, -1);
                set_node(i, lowest(g.intersection_set(aux.snode_payload(nxt))));
            } else {
                EdgeId a = aux.enode_payload(nxt);
                emit(f, -1);
                set_node(i, lowest(g.intersection(f, a)));
                pending = true;
            }
            break;
        }
        case AuxFamily::odd: {
            EdgeId f = edge.witness_middle;
            emit(f, -1);
            set_node(i, lowest(g.intersection_set(aux.snode_payload(nxt))));
            break;
        }
        case AuxFamily::two: {
            EdgeId f = edge.witness_middle;
            EdgeId a = aux.enode_payload(cur);
            EdgeId b = aux.enode_payload(nxt);
            if (pending) {
                emit(a, +1);
                pending = false;
            }
            set_node(i, lowest(g.intersection(a, f)));
            emit(f, -1);
            set_node(i, lowest(g.intersection(f, b)));
            emit(b, +1);
            break;
        }
        }
        cur = nxt;
    }
    // A pending edge node at the end is the twin of the start: under wrap_mode
    // it is e_k and gets emitted now; otherwise it is e_1, emitted at the start.
    if (wrap_mode && pending)
        emit(aux.enode_payload(cur), +1);

    const int k = i - 1;
    if (k < 3)
        throw MalformedPath("reconstructed walk shorter than 3");
    SignedClosedWalk walk;
    walk.edges = std::move(edges);
    walk.signs = std::move(signs);
    walk.nodes.assign(k, -1);
    for (auto [slot, v] : node_at) {
        int idx = (slot - 1) % k;
        if (walk.nodes[idx] >= 0 && walk.nodes[idx] != v)
            throw MalformedPath("wrap-around corner mismatch");
        walk.nodes[idx] = v;
    }
    for (NodeId v : walk.nodes)
        if (v < 0)
            throw MalformedPath("unassigned corner node");
    if (!walk.is_odd())
        throw MalformedPath("reconstructed walk is even");
    return walk;
}

} // namespace

SignedClosedWalk reconstruct_walk(const AuxGraph& aux, const TwinPath& path) {
    SignedClosedWalk walk = reconstruct_sequence(aux, path);
    if (!walk_is_valid(aux.graph(), walk))
        throw MalformedPath("reconstructed sequence violates the closed-walk conditions");
    return walk;
}

Cut path_block_cut(const AuxGraph& aux, const TwinPath& path) {
    const Hypergraph& g = aux.graph();
    Cut cut;
    cut.family = CutFamily::simple_odd_beta_cycle;
    cut.bound = 1;
    int cur = path.source;
    for (int arc : path.arcs) {
        const AuxGraph::Edge& edge = aux.edges()[arc];
        int nxt = edge.u == cur ? edge.v : edge.u;
        switch (edge.family) {
        case AuxFamily::inc: {
            int en = aux.is_enode(cur) ? cur : nxt;
            int vn = aux.is_vnode(cur) ? cur : nxt;
            cut.form += block_inc(g, aux.enode_payload(en), aux.vnode_payload(vn));
            break;
        }
        case AuxFamily::odd:
            cut.form += block_odd(g, edge.witness_middle,
                                  g.intersection_set(aux.snode_payload(cur)),
                                  g.intersection_set(aux.snode_payload(nxt)));
            break;
        case AuxFamily::one: {
            int en = aux.is_enode(cur) ? cur : nxt;
            int sn = aux.is_snode(cur) ? cur : nxt;
            cut.form += block_one(g, edge.witness_middle,
                                  g.intersection_set(aux.snode_payload(sn)),
                                  aux.enode_payload(en));
            break;
        }
        case AuxFamily::two:
            cut.form += block_two(g, edge.witness_middle, aux.enode_payload(cur),
                                  aux.enode_payload(nxt));
            break;
        }
        cur = nxt;
    }
    return cut;
}

namespace {

bool form_less(const LinearForm& a, const LinearForm& b) {
    if (a.constant != b.constant)
        return a.constant < b.constant;
    if (a.node_coeffs != b.node_coeffs)
        return a.node_coeffs < b.node_coeffs;
    return a.edge_coeffs < b.edge_coeffs;
}

} // namespace

BetaCycleSeparation separate_simple_odd_beta_cycle(const Hypergraph& g, const DensePoint& z,
                                                   const SeparationConfig& config,
                                                   const TripleSet* triples) {
    TripleSet local;
    if (!triples) {
        local = enumerate_triples(g);
        triples = &local;
    }
    AuxGraph aux(g, *triples, z, config.feas_tol);

    const int sources = aux.aux_node_count() / 2;
    struct SourceHit {
        double dist = kInf;
        TwinPath path;
        bool violated = false;
    };
    std::vector<SourceHit> hits(sources);

    int nthreads = config.threads > 0
                       ? config.threads
                       : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nthreads = std::min<int>(nthreads, sources > 0 ? sources : 1);
    const double report_cutoff = 1.0 - config.violation_tol;
    auto worker = [&](int tid) {
        DijkstraBuffers buf;
        for (int sidx = tid; sidx < sources; sidx += nthreads) {
            int source = 2 * sidx; // the plus-signed copy
            double dist = kInf;
            if (!dijkstra_to_twin(aux, source, config.length_cutoff, buf, &dist))
                continue;
            hits[sidx].dist = dist;
            if (dist < report_cutoff) {
                hits[sidx].path = extract_path(buf, source, aux.twin(source));
                hits[sidx].violated = true;
            }
        }
    };
    if (nthreads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }

    BetaCycleSeparation result;
    struct Entry {
        ViolatedWalk vw;
        LinearForm form;
    };
    std::vector<Entry> entries;
    std::set<LinearForm, bool (*)(const LinearForm&, const LinearForm&)> seen(&form_less);
    for (int sidx = 0; sidx < sources; ++sidx) {
        result.min_twin_path_length = std::min(result.min_twin_path_length, hits[sidx].dist);
        if (!hits[sidx].violated)
            continue;
        SignedClosedWalk walk = reconstruct_walk(aux, hits[sidx].path);
        LinearForm form = length_function(g, walk);
        double value = form.value_at(z);
        if (std::abs(value - hits[sidx].path.total_length) > 1e-6)
            throw MalformedPath("walk length " + std::to_string(value) +
                                " differs from path length " +
                                std::to_string(hits[sidx].path.total_length));
        if (!seen.insert(form).second)
            continue;
        entries.push_back(Entry{ViolatedWalk{std::move(walk),
                                             1.0 - hits[sidx].path.total_length,
                                             hits[sidx].path.total_length},
                                std::move(form)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.vw.violation != b.vw.violation)
            return a.vw.violation > b.vw.violation;
        return form_less(a.form, b.form);
    });
    for (Entry& entry : entries) {
        if (static_cast<int>(result.walks.size()) >= config.max_cuts)
            break;
        result.walks.push_back(std::move(entry.vw));
    }
    return result;
}

std::vector<Cut> separate_flowers(const Hypergraph& g, const DensePoint& z, int max_neighbors,
                                  double violation_tol) {
    std::vector<std::pair<double, Cut>> found;
    std::vector<double> edge_def(g.edge_count(), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (NodeId v : g.edge(e))
            edge_def[e] += 1.0 - z.node_vals[v];
    std::vector<double> set_def(g.intersection_set_count(), 0.0);
    for (int s = 0; s < g.intersection_set_count(); ++s)
        for (NodeId v : g.intersection_set(s))
            set_def[s] += 1.0 - z.node_vals[v];

    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        const double base = z.edge_vals[f] - 1.0 + edge_def[f];
        const auto& nbrs = g.adjacent_edges(f);
        std::vector<int> sids(nbrs.size());
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            sids[i] = *g.intersection_id(f, nbrs[i]);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            double one = base + (1.0 - z.edge_vals[nbrs[i]]) - set_def[sids[i]];
            if (one < -violation_tol)
                found.emplace_back(-one, flower_cut(g, f, {nbrs[i]}));
            if (max_neighbors < 2)
                continue;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (sets_intersect(g.intersection_set(sids[i]), g.intersection_set(sids[j])))
                    continue;
                double two = one + (1.0 - z.edge_vals[nbrs[j]]) - set_def[sids[j]];
                if (two < -violation_tol)
                    found.emplace_back(-two, flower_cut(g, f, {nbrs[i], nbrs[j]}));
            }
        }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Cut> cuts;
    cuts.reserve(found.size());
    for (auto& [viol, cut] : found)
        cuts.push_back(std::move(cut));
    return cuts;
}

std::vector<Cut> separate_standard(const Hypergraph& g, const DensePoint& z,
                                   double violation_tol) {
    std::vector<std::pair<double, Cut>> found;
    for (Cut& cut : standard_cuts(g)) {
        double viol = cut.violation_at(z);
        if (viol > violation_tol)
            found.emplace_back(viol, std::move(cut));
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Cut> cuts;
    cuts.reserve(found.size());
    for (auto& [viol, cut] : found)
        cuts.push_back(std::move(cut));
    return cuts;
}

} // namespace bpo

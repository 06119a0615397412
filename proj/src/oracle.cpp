#include "bpo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "bpo/engine.hpp"

namespace bpo {

namespace {

void guard_size(int node_count, int limit, const char* what) {
    if (node_count > limit)
        throw TooLarge(std::string(what) + " guarded at " + std::to_string(limit) +
                       " nodes, got " + std::to_string(node_count));
}

} // namespace

BruteForceResult brute_force_optimum(const Instance& inst) {
    const Hypergraph& g = inst.hypergraph;
    const int n = g.node_count();
    guard_size(n, 26, "brute_force_optimum");
    const bool minimize = inst.sense == Sense::minimize;

    // Gray-code sweep: per flip, adjust the node term and the activity of the
    // incident edges (an edge contributes iff none of its nodes is 0).
    std::vector<int> zeros(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        zeros[e] = static_cast<int>(g.edge(e).size());
    std::vector<int> x(n, 0);
    double value = inst.constant;
    double best = value;
    std::uint64_t best_step = 0;

    const std::uint64_t total = 1ull << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        int v = std::countr_zero(step);
        if (x[v]) {
            x[v] = 0;
            value -= inst.node_profit[v];
            for (EdgeId e : g.edges_of_node(v)) {
                if (zeros[e] == 0)
                    value -= inst.edge_profit[e];
                ++zeros[e];
            }
        } else {
            x[v] = 1;
            value += inst.node_profit[v];
            for (EdgeId e : g.edges_of_node(v)) {
                if (--zeros[e] == 0)
                    value += inst.edge_profit[e];
            }
        }
        if (minimize ? value < best : value > best) {
            best = value;
            best_step = step;
        }
    }

    BruteForceResult res;
    res.value = best;
    res.assignment.assign(n, 0);
    std::uint64_t gray = best_step ^ (best_step >> 1);
    for (int v = 0; v < n; ++v)
        res.assignment[v] = static_cast<int>((gray >> v) & 1);
    return res;
}

std::vector<bool> validate_cuts(const Hypergraph& g, const std::vector<Cut>& cuts) {
    const int n = g.node_count();
    guard_size(n, 20, "validate_cut");
    const int ncuts = static_cast<int>(cuts.size());

    std::vector<std::vector<std::pair<int, long long>>> node_entries(n);
    std::vector<std::vector<std::pair<int, long long>>> edge_entries(g.edge_count());
    std::vector<long long> value(ncuts), bound(ncuts);
    std::vector<bool> ok(ncuts, true);
    for (int c = 0; c < ncuts; ++c) {
        for (auto [v, coeff] : cuts[c].form.node_coeffs)
            node_entries[v].emplace_back(c, coeff);
        for (auto [e, coeff] : cuts[c].form.edge_coeffs)
            edge_entries[e].emplace_back(c, coeff);
        value[c] = cuts[c].form.constant; // the all-zeros integer point
        bound[c] = cuts[c].bound;
        if (value[c] < bound[c])
            ok[c] = false;
    }

    std::vector<int> zeros(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        zeros[e] = static_cast<int>(g.edge(e).size());
    std::vector<int> x(n, 0);
    std::vector<int> touched;
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        int v = std::countr_zero(step);
        int delta = x[v] ? -1 : 1;
        x[v] ^= 1;
        touched.clear();
        for (auto [c, coeff] : node_entries[v]) {
            value[c] += delta * coeff;
            touched.push_back(c);
        }
        for (EdgeId e : g.edges_of_node(v)) {
            int was_active = zeros[e] == 0;
            zeros[e] -= delta;
            int is_active = zeros[e] == 0;
            if (was_active != is_active) {
                int edelta = is_active - was_active;
                for (auto [c, coeff] : edge_entries[e]) {
                    value[c] += edelta * coeff;
                    touched.push_back(c);
                }
            }
        }
        // Only fully applied flips represent integer points.
        for (int c : touched)
            if (value[c] < bound[c])
                ok[c] = false;
    }
    return ok;
}

bool validate_cut(const Hypergraph& g, const Cut& cut) {
    return validate_cuts(g, {cut}).front();
}

namespace {

struct WalkSearch {
    const Hypergraph& g;
    const DensePoint& z;
    int max_k;
    double best_len = std::numeric_limits<double>::infinity();
    std::optional<SignedClosedWalk> best;

    std::vector<EdgeId> edges;
    std::vector<int> signs;
    std::vector<NodeId> nodes; // nodes[i] = v_{i+1}; slot 0 filled at closure

    // Dominance per DFS tree: a partial walk is pruned when the same
    // continuation state was already reached at no larger cost.  The state
    // carries everything future blocks and the closure can depend on, so the
    // minimum is preserved exactly.
    using State = std::tuple<EdgeId, EdgeId, int, int, NodeId, int>;
    std::map<State, double> seen;

    WalkSearch(const Hypergraph& graph, const DensePoint& point, int maxk)
        : g(graph), z(point), max_k(maxk) {}

    double block_value(int idx) const {
        // Length-function contribution of walk index idx (0-based), cyclic.
        const int k = static_cast<int>(edges.size());
        EdgeId eprev = edges[(idx + k - 1) % k];
        EdgeId ecur = edges[idx];
        EdgeId enext = edges[(idx + 1) % k];
        int sp = signs[(idx + k - 1) % k];
        int sc = signs[idx];
        int sn = signs[(idx + 1) % k];
        LinearForm s;
        if (sc > 0) {
            if (sp > 0)
                s += block_inc(g, ecur, nodes[idx]);
            if (sn > 0)
                s += block_inc(g, ecur, nodes[(idx + 1) % k]);
        } else if (sp < 0 && sn < 0) {
            s = block_odd(g, ecur, g.intersection(ecur, eprev), g.intersection(ecur, enext));
        } else if (sp < 0) {
            s = block_one(g, ecur, g.intersection(ecur, eprev), enext);
        } else if (sn < 0) {
            s = block_one(g, ecur, g.intersection(ecur, enext), eprev);
        } else {
            s = block_two(g, ecur, eprev, enext);
        }
        return s.value_at(z);
    }

    void try_close() {
        const int k = static_cast<int>(edges.size());
        if (k < 3)
            return;
        int negatives = 0;
        for (int s : signs)
            if (s < 0)
                ++negatives;
        if (negatives % 2 == 0)
            return;
        const NodeSet closing = g.intersection(edges[k - 1], edges[0]);
        if (closing.empty())
            return;
        const bool free_choice = signs[k - 1] > 0 && signs[0] > 0;
        SignedClosedWalk walk;
        walk.edges = edges;
        walk.signs = signs;
        walk.nodes = nodes;
        for (NodeId v1 : closing) {
            walk.nodes[0] = v1;
            if (!walk_is_valid(g, walk))
                continue;
            double len = length_function(g, walk).value_at(z);
            if (len < best_len - 1e-12) {
                best_len = len;
                best = walk;
            }
            if (!free_choice)
                break;
        }
    }

    void extend(double partial) {
        try_close();
        const int t = static_cast<int>(edges.size());
        if (t >= max_k)
            return;
        EdgeId ecur = edges.back();
        for (EdgeId enext : g.adjacent_edges(ecur)) {
            if (enext < edges.front())
                continue; // rotations starting at the minimum edge id suffice
            if (t >= 2 &&
                sets_intersect(g.intersection(edges[t - 2], ecur), g.edge(enext)))
                continue;
            const NodeSet& corner = g.intersection(ecur, enext);
            for (int snext : {1, -1}) {
                const bool free_choice = signs.back() > 0 && snext > 0;
                for (NodeId vnext : corner) {
                    edges.push_back(enext);
                    signs.push_back(snext);
                    nodes.push_back(vnext);
                    double delta = t >= 2 ? block_value(t - 1) : 0.0;
                    bool keep = partial + delta <= best_len + 1e-9;
                    if (keep && t >= 2) {
                        int parity = 0;
                        for (int s : signs)
                            parity ^= s < 0;
                        State state{ecur, enext, signs[t - 1], snext, vnext, parity};
                        auto [it, inserted] = seen.try_emplace(state, partial + delta);
                        if (!inserted) {
                            if (partial + delta >= it->second - 1e-12)
                                keep = false;
                            else
                                it->second = partial + delta;
                        }
                    }
                    if (keep)
                        extend(partial + delta);
                    edges.pop_back();
                    signs.pop_back();
                    nodes.pop_back();
                    if (!free_choice)
                        break;
                }
            }
        }
    }

    void run() {
        for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
            for (int s0 : {1, -1}) {
                edges.assign(1, e0);
                signs.assign(1, s0);
                nodes.assign(1, -1); // v_1 picked at closure
                for (EdgeId e1 : g.adjacent_edges(e0)) {
                    if (e1 < e0)
                        continue;
                    const NodeSet& corner = g.intersection(e0, e1);
                    for (int s1 : {1, -1}) {
                        const bool free_choice = s0 > 0 && s1 > 0;
                        for (NodeId v1 : corner) {
                            edges.push_back(e1);
                            signs.push_back(s1);
                            nodes.push_back(v1);
                            seen.clear(); // dominance is per (anchor, first step)
                            extend(0.0);
                            edges.pop_back();
                            signs.pop_back();
                            nodes.pop_back();
                            if (!free_choice)
                                break;
                        }
                    }
                }
            }
        }
    }
};

} // namespace

std::optional<OracleWalk> brute_force_separation(const Hypergraph& g, const DensePoint& z,
                                                 int max_k) {
    if (g.edge_count() > 10 || g.node_count() > 16)
        throw TooLarge("brute_force_separation is meant for tiny graphs");
    WalkSearch search(g, z, max_k);
    search.run();
    if (!search.best)
        return std::nullopt;
    return OracleWalk{*search.best, search.best_len - 1.0};
}

int aux_walk_bound(const Hypergraph& g) {
    return 4 * (g.node_count() + g.intersection_set_count() + g.edge_count());
}

bool check_redundancy_decomposition(const Hypergraph& g, const SignedClosedWalk& walk, int i,
                                    int j) {
    const int k = walk.length();
    if (i < 1 || j < 1 || i > k || j > k || i == j)
        throw BadIndices("positions must be distinct and within the walk");
    if (walk.edges[i - 1] != walk.edges[j - 1] || walk.signs[i - 1] <= 0 ||
        walk.signs[j - 1] <= 0)
        throw NoRepetition("positions must repeat one edge with both signs +");
    if (!walk.is_odd())
        throw BadIndices("decomposition applies to odd walks");

    SignedClosedWalk rotated = rotate_walk(walk, i - 1);
    int jj = ((j - i) % k + k) % k + 1; // position of the repeat after rotation
    if (jj < 4 || jj > k - 2)
        throw BadIndices("repeat position must lie in [4, k-2] after rotation");

    SignedClosedWalk c1;
    c1.nodes.push_back(rotated.nodes[jj - 1]);
    for (int t = 1; t < jj - 1; ++t)
        c1.nodes.push_back(rotated.nodes[t]);
    for (int t = 0; t < jj - 1; ++t) {
        c1.edges.push_back(rotated.edges[t]);
        c1.signs.push_back(rotated.signs[t]);
    }

    SignedClosedWalk c2;
    c2.nodes.push_back(rotated.nodes[0]);
    for (int t = jj; t < k; ++t)
        c2.nodes.push_back(rotated.nodes[t]);
    for (int t = jj - 1; t < k; ++t) {
        c2.edges.push_back(rotated.edges[t]);
        c2.signs.push_back(rotated.signs[t]);
    }

    LinearForm whole = length_function(g, rotated);
    LinearForm part1 = length_function(g, c1);
    LinearForm part2 = length_function(g, c2);
    return whole == part1 + part2;
}

bool verify_perfect_formulation(const Hypergraph& g, int trials, std::uint32_t seed,
                                double tol) {
    if (!is_cycle_hypergraph(g).is_cycle)
        throw NotCycleHypergraph("perfect-formulation check needs a cycle hypergraph");
    guard_size(g.node_count(), 20, "verify_perfect_formulation");

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> profit(-10, 10);
    for (int trial = 0; trial < trials; ++trial) {
        Instance inst{g,
                      std::vector<double>(g.node_count()),
                      std::vector<double>(g.edge_count()),
                      0.0,
                      trial % 2 ? Sense::minimize : Sense::maximize,
                      "cycle-trial-" + std::to_string(trial)};
        for (auto& p : inst.node_profit)
            p = profit(rng);
        for (auto& p : inst.edge_profit)
            p = profit(rng);
        PhaseConfig config;
        BoundReport report = run(inst, config);
        BruteForceResult exact = brute_force_optimum(inst);
        if (std::abs(report.final_bound - exact.value) > tol)
            return false;
    }
    return true;
}

BruteForceResult round_and_improve(const Instance& inst, const DensePoint& z) {
    const Hypergraph& g = inst.hypergraph;
    BruteForceResult res;
    res.assignment.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        res.assignment[v] = z.node_vals[v] >= 0.5 ? 1 : 0;
    res.value = inst.evaluate(res.assignment);
    const bool minimize = inst.sense == Sense::minimize;
    bool improved = true;
    int rounds = 0;
    while (improved && rounds++ < 1000) {
        improved = false;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            res.assignment[v] ^= 1;
            double candidate = inst.evaluate(res.assignment);
            if (minimize ? candidate < res.value - 1e-12 : candidate > res.value + 1e-12) {
                res.value = candidate;
                improved = true;
            } else {
                res.assignment[v] ^= 1;
            }
        }
    }
    return res;
}

} // namespace bpo

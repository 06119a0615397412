#pragma once

#include <random>

#include "bpo/cuts.hpp"
#include "bpo/generators.hpp"
#include "bpo/hypergraph.hpp"
#include "bpo/walk.hpp"

namespace fixtures {

// Five-edge closed walk fixture: nodes v1..v5 are 0..4, u1 = 5, u4 = 6.
// e1 = {v1,u1,v2}, e2 = {v2,v3}, e3 = {v3,v4}, e4 = {v4,v5,u4}, e5 = {v5,v1,u1}.
inline bpo::Hypergraph example1_graph() {
    return bpo::build_hypergraph(7, {{0, 5, 1}, {1, 2}, {2, 3}, {3, 4, 6}, {4, 0, 5}});
}

// The walk v1-e1-v2-e2-v3-e3-v4-e4-v5-e5-v1 with signature (-,+,+,-,-).
inline bpo::SignedClosedWalk example1_walk() {
    bpo::SignedClosedWalk walk;
    walk.nodes = {0, 1, 2, 3, 4};
    walk.edges = {0, 1, 2, 3, 4};
    walk.signs = {-1, 1, 1, -1, -1};
    return walk;
}

// Walk once around a cycle hypergraph with random corner choices and a random
// signature; resampled until odd when `odd` is requested.
inline bpo::SignedClosedWalk ring_walk(const bpo::Hypergraph& g, std::mt19937& rng,
                                       bool force_odd = true) {
    auto check = bpo::is_cycle_hypergraph(g);
    const auto& order = check.ordering;
    const int m = static_cast<int>(order.size());
    bpo::SignedClosedWalk walk;
    walk.edges.assign(order.begin(), order.end());
    walk.nodes.resize(m);
    for (int i = 0; i < m; ++i) {
        const auto cap =
            bpo::set_intersection(g.edge(order[(i + m - 1) % m]), g.edge(order[i]));
        walk.nodes[i] = cap[std::uniform_int_distribution<int>(
            0, static_cast<int>(cap.size()) - 1)(rng)];
    }
    walk.signs.resize(m);
    do {
        for (int i = 0; i < m; ++i)
            walk.signs[i] = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    } while (force_odd && !walk.is_odd());
    return walk;
}

inline bpo::Hypergraph random_cycle_graph(std::mt19937& rng, int min_m = 3, int max_m = 6) {
    bpo::CycleParams params;
    params.edge_count = std::uniform_int_distribution<int>(min_m, max_m)(rng);
    params.min_edge_size = 2;
    params.max_edge_size = 4;
    params.min_overlap = 1;
    params.max_overlap = 2;
    params.seed = rng();
    return bpo::gen_cycle_hypergraph(params);
}

} // namespace fixtures

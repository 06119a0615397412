#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bpo/engine.hpp"
#include "bpo/oracle.hpp"
#include "bpo/separation.hpp"
#include "fixtures.hpp"

using namespace bpo;

namespace {

DensePoint integer_point(const Hypergraph& g, const std::vector<int>& assignment) {
    DensePoint z;
    z.node_vals.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        z.node_vals[v] = assignment[v];
    z.edge_vals.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int active = 1;
        for (NodeId v : g.edge(e))
            active &= assignment[v];
        z.edge_vals[e] = active;
    }
    return z;
}

// Final LP point of the flower phases for a random integer objective.
DensePoint flower_point(const Instance& inst) {
    PhaseConfig config;
    config.phases = {Phase::standard, Phase::flower_one, Phase::flower_two};
    return run(inst, config).final_point;
}

Instance random_instance(const Hypergraph& g, std::mt19937& rng, Sense sense) {
    Instance inst{g, std::vector<double>(g.node_count()), std::vector<double>(g.edge_count()),
                  0.0, sense, "fixture"};
    std::uniform_int_distribution<int> profit(-10, 10);
    for (auto& p : inst.node_profit)
        p = profit(rng);
    for (auto& p : inst.edge_profit)
        p = profit(rng);
    return inst;
}

} // namespace

TEST_CASE("aux graph of the example hypergraph has the expected node counts") {
    Hypergraph g = fixtures::example1_graph();
    DensePoint ones = integer_point(g, std::vector<int>(7, 1));
    AuxGraph aux(g, enumerate_triples(g), ones);
    CHECK(aux.plus_node_count() == 14);
    CHECK(aux.minus_node_count() == 10);
    CHECK(aux.e_node_count() == 10);
}

TEST_CASE("aux edge lengths at an integer point are nonnegative integers") {
    Hypergraph g = fixtures::example1_graph();
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        std::vector<int> assignment(7);
        for (auto& b : assignment)
            b = std::uniform_int_distribution<int>(0, 1)(rng);
        DensePoint z = integer_point(g, assignment);
        AuxGraph aux(g, enumerate_triples(g), z);
        for (const auto& edge : aux.edges()) {
            CHECK(edge.length >= 0.0);
            CHECK(std::abs(edge.length - std::round(edge.length)) < 1e-12);
        }
    }
}

TEST_CASE("disjoint edges produce only incidence arcs") {
    Hypergraph g = build_hypergraph(4, {{0, 1}, {2, 3}});
    DensePoint z = integer_point(g, {1, 1, 1, 1});
    AuxGraph aux(g, enumerate_triples(g), z);
    CHECK(aux.minus_node_count() == 0);
    for (const auto& edge : aux.edges())
        CHECK(edge.family == AuxFamily::inc);
}

TEST_CASE("points outside the flower relaxation are rejected with a witness") {
    Hypergraph g = build_hypergraph(3, {{0, 1, 2}, {0, 1}});
    DensePoint z;
    z.node_vals = {1.0, 1.0, 1.0};
    z.edge_vals = {0.0, 1.0}; // flower at {0,1,2} with neighbor {0,1} gives -1
    CHECK_THROWS_AS(AuxGraph(g, enumerate_triples(g), z), PointNotInFlowerRelaxation);
}

TEST_CASE("integer points separate nothing") {
    Hypergraph g = fixtures::example1_graph();
    DensePoint z = integer_point(g, {1, 0, 1, 0, 1, 1, 0});
    auto res = separate_simple_odd_beta_cycle(g, z);
    CHECK(res.walks.empty());
    CHECK(separate_flowers(g, z, 2).empty());
    CHECK(separate_standard(g, z).empty());
}

TEST_CASE("the all-negative triangle point is cut off with violation one") {
    Hypergraph g = build_hypergraph(3, {{0, 1}, {1, 2}, {2, 0}});
    DensePoint z;
    z.node_vals = {0.5, 0.5, 0.5};
    z.edge_vals = {0.0, 0.0, 0.0};
    SeparationConfig config;
    auto res = separate_simple_odd_beta_cycle(g, z, config);
    REQUIRE(!res.walks.empty());
    CHECK(res.walks.front().violation == doctest::Approx(1.0));
    CHECK(res.walks.front().path_length == doctest::Approx(0.0));
    const SignedClosedWalk& walk = res.walks.front().walk;
    CHECK(walk.is_odd());
    Cut cut = simple_odd_beta_cycle_cut(g, walk);
    CHECK(cut.form.value_at(z) == doctest::Approx(res.walks.front().path_length));
    // The cut itself is valid for every integer point.
    CHECK(validate_cut(g, cut));
}

TEST_CASE("reconstruction handles a (+,-,+) traversal as one double step") {
    Hypergraph g = build_hypergraph(3, {{0, 1}, {1, 2}, {2, 0}});
    // Feasible fractional point keeping all aux lengths small but valid.
    DensePoint z;
    z.node_vals = {0.6, 0.6, 0.6};
    z.edge_vals = {0.3, 0.3, 0.3};
    AuxGraph aux(g, enumerate_triples(g), z);
    // Path (v0,+) -inc- (e0,+) -two- (e2,-) -inc- (v0,-): walk e0(+), e1(-), e2(+).
    int v_plus = aux.vnode(0, +1);
    int e0_plus = aux.enode(0, +1);
    int e2_minus = aux.enode(2, -1);
    int v_minus = aux.vnode(0, -1);
    TwinPath path;
    path.source = v_plus;
    path.target = v_minus;
    double total = 0.0;
    auto find_arc = [&](int a, int b) {
        for (int idx = 0; idx < aux.edge_count(); ++idx) {
            const auto& edge = aux.edges()[idx];
            if ((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)) {
                total += edge.length;
                return idx;
            }
        }
        REQUIRE(false);
        return -1;
    };
    path.arcs.push_back(find_arc(v_plus, e0_plus));
    path.arcs.push_back(find_arc(e0_plus, e2_minus));
    path.arcs.push_back(find_arc(e2_minus, v_minus));
    path.total_length = total;
    SignedClosedWalk walk = reconstruct_walk(aux, path);
    CHECK(walk.length() == 3);
    CHECK(walk.is_odd());
    int negatives = 0;
    for (int s : walk.signs)
        negatives += s < 0;
    CHECK(negatives == 1);
    CHECK(length_function(g, walk).value_at(z) == doctest::Approx(path.total_length));
}

TEST_CASE("separation is deterministic") {
    std::mt19937 rng(777);
    Hypergraph g = fixtures::random_cycle_graph(rng, 4, 5);
    Instance inst = random_instance(g, rng, Sense::maximize);
    DensePoint z = flower_point(inst);
    auto a = separate_simple_odd_beta_cycle(g, z);
    auto b = separate_simple_odd_beta_cycle(g, z);
    REQUIRE(a.walks.size() == b.walks.size());
    for (std::size_t i = 0; i < a.walks.size(); ++i) {
        CHECK(serialize_cut(simple_odd_beta_cycle_cut(g, a.walks[i].walk)) ==
              serialize_cut(simple_odd_beta_cycle_cut(g, b.walks[i].walk)));
    }
    CHECK(a.min_twin_path_length == b.min_twin_path_length);
}

TEST_CASE("flower separation trivia") {
    Hypergraph g = build_hypergraph(3, {{0, 1, 2}, {0, 1}});
    SUBCASE("violation 1 at the spec point") {
        DensePoint z;
        z.node_vals = {1.0, 1.0, 1.0};
        z.edge_vals = {0.0, 1.0};
        auto cuts = separate_flowers(g, z, 1);
        REQUIRE(!cuts.empty());
        CHECK(cuts.front().violation_at(z) == doctest::Approx(1.0));
    }
    SUBCASE("integer points are never cut") {
        DensePoint z = integer_point(g, {1, 0, 1});
        CHECK(separate_flowers(g, z, 2).empty());
    }
}

TEST_CASE("standard separation trivia") {
    Hypergraph g = build_hypergraph(2, {{0, 1}});
    SUBCASE("both incidence cuts violated") {
        DensePoint z;
        z.node_vals = {0.0, 0.0};
        z.edge_vals = {1.0};
        auto cuts = separate_standard(g, z);
        CHECK(cuts.size() == 2);
        CHECK(cuts.front().violation_at(z) == doctest::Approx(1.0));
    }
    SUBCASE("all ones is clean") {
        DensePoint z;
        z.node_vals = {1.0, 1.0};
        z.edge_vals = {1.0};
        CHECK(separate_standard(g, z).empty());
    }
    SUBCASE("zero edge with unit nodes trips the lower linearization bound") {
        // z_e must reach 1 when every node is 1; only the (2b) row is violated.
        DensePoint z;
        z.node_vals = {1.0, 1.0};
        z.edge_vals = {0.0};
        auto cuts = separate_standard(g, z);
        REQUIRE(cuts.size() == 1);
        CHECK(cuts.front().family == CutFamily::standard_2);
        CHECK(cuts.front().violation_at(z) == doctest::Approx(1.0));
    }
}

TEST_CASE("twin-path minimum matches the exhaustive walk oracle on small fixtures") {
    std::mt19937 rng(20250810);
    int done = 0;
    int attempts = 0;
    while (done < 12 && attempts < 60) {
        ++attempts;
        Hypergraph g = fixtures::random_cycle_graph(rng, 3, 5);
        if (g.node_count() > 12)
            continue;
        Instance inst = random_instance(g, rng, attempts % 2 ? Sense::maximize
                                                             : Sense::minimize);
        DensePoint z = flower_point(inst);
        SeparationConfig config;
        config.length_cutoff = std::numeric_limits<double>::infinity();
        auto sep = separate_simple_odd_beta_cycle(g, z, config);
        int max_k = aux_walk_bound(g);
        auto oracle = brute_force_separation(g, z, max_k);
        REQUIRE(oracle.has_value());
        REQUIRE(std::isfinite(sep.min_twin_path_length));
        CHECK(sep.min_twin_path_length ==
              doctest::Approx(oracle->slack + 1.0).epsilon(1e-9));
        for (const auto& vw : sep.walks) {
            CHECK(length_function(g, vw.walk).value_at(z) ==
                  doctest::Approx(vw.path_length).epsilon(1e-9));
        }
        ++done;
    }
    CHECK(done == 12);
}

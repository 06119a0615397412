#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bpo/generators.hpp"
#include "bpo/polynomial.hpp"
#include "fixtures.hpp"

using namespace bpo;

TEST_CASE("parse: sense, constant, comments, term collection") {
    Polynomial p = parse_polynomial("min\n3 x0 x1 x2\n-1 x0\n");
    CHECK(p.sense == Sense::minimize);
    CHECK(p.terms.size() == 2);
    CHECK(p.terms.at({0, 1, 2}) == 3.0);
    CHECK(p.terms.at({0}) == -1.0);

    Polynomial q = parse_polynomial("max\nc 4\n# comment\n2 a b # trailing\n-2 a b\n1 b\n");
    CHECK(q.sense == Sense::maximize);
    CHECK(q.constant == 4.0);
    CHECK(q.terms.size() == 1); // the a*b terms cancel
    CHECK(q.terms.at({1}) == 1.0);
}

TEST_CASE("parse: multilinear reduction of repeated variables") {
    Polynomial p = parse_polynomial("min\n1 x0 x0\n");
    CHECK(p.terms.size() == 1);
    CHECK(p.terms.at({0}) == 1.0);
}

TEST_CASE("parse: errors carry line information") {
    CHECK_THROWS_AS(parse_polynomial("maybe\n1 x0\n"), UnknownSense);
    CHECK_THROWS_AS(parse_polynomial(""), UnknownSense);
    CHECK_THROWS_AS(parse_polynomial("min\nfoo x0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("min\n3\n"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("min\nc zzz\n"), SyntaxError);
}

TEST_CASE("write/parse round trip preserves the named term set") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p;
        p.sense = trial % 2 ? Sense::minimize : Sense::maximize;
        p.constant = std::uniform_int_distribution<int>(-3, 3)(rng);
        int terms = std::uniform_int_distribution<int>(1, 10)(rng);
        for (int t = 0; t < terms; ++t) {
            int deg = std::uniform_int_distribution<int>(1, 4)(rng);
            std::vector<int> mono;
            for (int i = 0; i < deg; ++i)
                mono.push_back(std::uniform_int_distribution<int>(0, 7)(rng));
            p.add_term(mono, std::uniform_int_distribution<int>(1, 5)(rng));
        }
        Polynomial back = parse_polynomial(write_polynomial(p));
        CHECK(back.sense == p.sense);
        CHECK(back.constant == p.constant);
        CHECK(back.named_terms() == p.named_terms());
    }
}

TEST_CASE("linearize: monomial degrees map to constant, nodes and edges") {
    Polynomial p = parse_polynomial("max\nc 7\n3 x0 x1 x2\n-1 x0\n");
    Instance inst = linearize(p, "tiny");
    CHECK(inst.hypergraph.node_count() == 3);
    CHECK(inst.hypergraph.edge_count() == 1);
    CHECK(inst.hypergraph.edge(0) == NodeSet{0, 1, 2});
    CHECK(inst.edge_profit[0] == 3.0);
    CHECK(inst.node_profit[0] == -1.0);
    CHECK(inst.constant == 7.0);
    CHECK(inst.sense == Sense::maximize);
}

namespace {

// Direct evaluation of the windowed autocorrelation energy in +-1 variables.
long long labs_energy_direct(int n, int r, const std::vector<int>& x) {
    long long total = 0;
    for (int i = 1; i <= n - r + 1; ++i) {
        for (int d = 1; d <= r - 1; ++d) {
            long long inner = 0;
            for (int j = i; j <= i + r - 1 - d; ++j)
                inner += static_cast<long long>(2 * x[j - 1] - 1) * (2 * x[j + d - 1] - 1);
            total += inner * inner;
        }
    }
    return total;
}

} // namespace

TEST_CASE("labs expansion matches direct energy evaluation") {
    std::mt19937 rng(4242);
    for (auto [n, r] : {std::pair{8, 3}, {10, 4}, {12, 5}, {20, 5}}) {
        Polynomial p = gen_labs({n, r});
        CHECK(p.sense == Sense::minimize);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<int> x(n);
            for (auto& b : x)
                b = std::uniform_int_distribution<int>(0, 1)(rng);
            CHECK(p.evaluate(x) == static_cast<double>(labs_energy_direct(n, r, x)));
        }
        std::vector<int> ones(n, 1);
        CHECK(p.evaluate(ones) == static_cast<double>(labs_energy_direct(n, r, ones)));
    }
}

TEST_CASE("labs-20-05 has 187 nonlinear monomials") {
    Polynomial p = gen_labs({20, 5});
    int nonlinear = 0;
    for (const auto& [mono, coeff] : p.terms)
        if (mono.size() >= 2)
            ++nonlinear;
    CHECK(nonlinear == 187);
    Instance inst = linearize(p, "labs-20-05");
    CHECK(inst.hypergraph.node_count() == 20);
    CHECK(inst.hypergraph.edge_count() == 187);
}

TEST_CASE("labs round trip through the text format") {
    Polynomial p = gen_labs({20, 5});
    Polynomial back = parse_polynomial(write_polynomial(p));
    CHECK(back.terms.size() == p.terms.size());
    CHECK(back.named_terms() == p.named_terms());
    CHECK(back.constant == p.constant);
}

TEST_CASE("image generator: variable count and smooth base") {
    ImageParams params;
    params.width = 10;
    params.height = 10;
    params.base = BaseImage::top_left_rectangle;
    params.perturbation = Perturbation::none;
    Polynomial p = gen_image(params);
    CHECK(p.var_count() == 100);
    Instance inst = linearize(p, "img");
    CHECK(inst.hypergraph.node_count() == 100);

    // With no perturbation the base image evaluates to 0: perfect similarity
    // and no checkerboard penalty on any constant-or-split 2x2 window.
    std::vector<int> base = base_image(params);
    CHECK(p.evaluate(base) == 0.0);
    // Any other assignment cannot do better.
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        std::vector<int> x = base;
        for (int flips = 0; flips < 5; ++flips)
            x[std::uniform_int_distribution<int>(0, 99)(rng)] ^= 1;
        CHECK(p.evaluate(x) >= 0.0);
    }
}

TEST_CASE("image generator: seeded perturbation is reproducible and distinct") {
    ImageParams low{6, 6, BaseImage::cross, Perturbation::low, 11, {}};
    ImageParams high{6, 6, BaseImage::cross, Perturbation::high, 11, {}};
    CHECK(blurred_image(low) == blurred_image(low));
    CHECK(write_polynomial(gen_image(high)) == write_polynomial(gen_image(high)));
    CHECK(blurred_image(low) != blurred_image(high));
}

TEST_CASE("cycle hypergraph generator meets its postconditions") {
    SUBCASE("random parameters") {
        std::mt19937 rng(13);
        for (int t = 0; t < 30; ++t) {
            CycleParams params;
            params.edge_count = std::uniform_int_distribution<int>(3, 8)(rng);
            params.min_edge_size = 2;
            params.max_edge_size = 4;
            params.min_overlap = 1;
            params.max_overlap = 2;
            params.seed = rng();
            Hypergraph g = gen_cycle_hypergraph(params);
            CHECK(is_cycle_hypergraph(g).is_cycle);
        }
    }
    SUBCASE("overlap exactly 2 everywhere") {
        CycleParams params;
        params.edge_count = 4;
        params.min_edge_size = 4;
        params.max_edge_size = 5;
        params.min_overlap = 2;
        params.max_overlap = 2;
        params.seed = 777;
        Hypergraph g = gen_cycle_hypergraph(params);
        REQUIRE(is_cycle_hypergraph(g).is_cycle);
        for (const auto& [e, f, sid] : g.intersecting_pairs())
            CHECK(g.intersection_set(sid).size() == 2);
    }
    SUBCASE("m = 3 has empty triple intersection") {
        CycleParams params;
        params.edge_count = 3;
        params.seed = 5;
        Hypergraph g = gen_cycle_hypergraph(params);
        NodeSet cap = set_intersection(g.edge(0), g.edge(1));
        CHECK(!sets_intersect(cap, g.edge(2)));
    }
    SUBCASE("infeasible parameters are rejected") {
        CycleParams params;
        params.edge_count = 2;
        CHECK_THROWS_AS(gen_cycle_hypergraph(params), InfeasibleParams);
        params.edge_count = 3;
        params.min_overlap = 3;
        params.max_overlap = 3;
        params.max_edge_size = 4;
        CHECK_THROWS_AS(gen_cycle_hypergraph(params), InfeasibleParams);
    }
}

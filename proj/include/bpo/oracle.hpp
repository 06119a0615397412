#pragma once

#include <cstdint>
#include <optional>

#include "bpo/cuts.hpp"
#include "bpo/polynomial.hpp"

namespace bpo {

struct BruteForceResult {
    double value = 0.0;
    std::vector<int> assignment;
};

// Exact optimum by enumerating all 2^|V| assignments (Gray-code incremental
// evaluation); guarded at |V| <= 26.
BruteForceResult brute_force_optimum(const Instance& inst);

// True iff every integer point of the multilinear polytope satisfies the cut;
// guarded at |V| <= 20.
bool validate_cut(const Hypergraph& g, const Cut& cut);
// Same sweep for many cuts at once.
std::vector<bool> validate_cuts(const Hypergraph& g, const std::vector<Cut>& cuts);

struct OracleWalk {
    SignedClosedWalk walk;
    double slack = 0.0; // length function value minus 1
};

// Exhaustive branch-and-bound over all valid odd signed closed walks with
// k <= max_k, including every corner choice at (+,+) corners and every
// signature; returns the walk minimizing the length function at z.
// Independent of the auxiliary-graph machinery.
std::optional<OracleWalk> brute_force_separation(const Hypergraph& g, const DensePoint& z,
                                                 int max_k);

// Safe walk-length bound for comparisons against the twin-path search: twice
// the auxiliary node count, since a shortest twin path is simple and each of
// its arcs contributes at most two walk edges.
int aux_walk_bound(const Hypergraph& g);

// Splits a walk with e_i = e_j, both signs +, into the two closed walks of the
// redundancy decomposition and checks the coefficient-exact sum identity.
// Indices are 1-based positions into the walk.
bool check_redundancy_decomposition(const Hypergraph& g, const SignedClosedWalk& walk, int i,
                                    int j);

// For `trials` seeded random integer objectives on a cycle hypergraph, checks
// that the full cutting-plane bound matches the brute-force optimum.
bool verify_perfect_formulation(const Hypergraph& g, int trials, std::uint32_t seed,
                                double tol = 1e-6);

// Rounds a fractional point and 1-flip-improves it; a cheap best-known
// reference for instances too large to enumerate.
BruteForceResult round_and_improve(const Instance& inst, const DensePoint& z);

} // namespace bpo

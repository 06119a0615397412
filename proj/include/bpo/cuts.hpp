#pragma once

#include <optional>
#include <string>

#include "bpo/linear_form.hpp"
#include "bpo/walk.hpp"

namespace bpo {

enum class CutFamily { standard_1, standard_2, flower_1, flower_2, simple_odd_beta_cycle };

std::string to_string(CutFamily family);

// Provenance of a cut: which incidence, flower or walk produced it.
struct CutWitness {
    EdgeId edge = -1;               // standard: the edge; flower: the center
    NodeId node = -1;               // standard (2a): the node
    std::vector<EdgeId> neighbors;  // flower neighbors
    std::optional<SignedClosedWalk> walk;
};

// Inequality form(z) >= bound.
struct Cut {
    LinearForm form;
    long long bound = 0;
    CutFamily family = CutFamily::standard_1;
    CutWitness witness;

    double violation_at(const DensePoint& z) const {
        return static_cast<double>(bound) - form.value_at(z);
    }
    double slack_at(const DensePoint& z) const { return -violation_at(z); }
};

std::string serialize_cut(const Cut& cut);

// All linearization inequalities: z_v - z_e >= 0 per incidence and
// (z_e - 1) + sum_{v in e} (1 - z_v) >= 0 per edge.
std::vector<Cut> standard_cuts(const Hypergraph& g);

// Flower inequality centered at f: (z_f - 1) + sum_i (1 - z_{e_i})
// + sum_{v in f minus union of neighbors} (1 - z_v) >= 0, for 1 or 2 neighbors
// with disjoint intersections inside f.
Cut flower_cut(const Hypergraph& g, EdgeId center, const std::vector<EdgeId>& neighbors);

// Building blocks, each nonnegative over the flower relaxation.
LinearForm block_inc(const Hypergraph& g, EdgeId e, NodeId v);
LinearForm block_odd(const Hypergraph& g, EdgeId e, const NodeSet& u, const NodeSet& w);
LinearForm block_one(const Hypergraph& g, EdgeId e, const NodeSet& u, EdgeId f);
LinearForm block_two(const Hypergraph& g, EdgeId e, EdgeId f, EdgeId g_edge);

// Sign-pattern-driven sum of building blocks along the walk.
LinearForm length_function(const Hypergraph& g, const SignedClosedWalk& walk);

// Closed form of the same function: edge terms by sign, node terms at (+,+)
// corners, complemented node terms at (-,-) corner intersections and on
// exclusive nodes of negative edges, minus twice the number of (-,-) corners.
LinearForm combined_form(const Hypergraph& g, const SignedClosedWalk& walk);

// length_function(walk) >= 1; requires the walk to be odd.
Cut simple_odd_beta_cycle_cut(const Hypergraph& g, const SignedClosedWalk& walk);

// The inequality halved and rounded: all variable coefficients of the length
// function are even and its constant odd, so dividing by two and rounding the
// right-hand side up yields an all-integer Chvatal-Gomory cut over the flower
// relaxation.  The returned form carries the halved variable coefficients with
// zero constant; bound = (1 - constant) / 2.
Cut cg_form(const Hypergraph& g, const SignedClosedWalk& walk);

// Closed form on walks whose support hypergraph is a cycle hypergraph, via the
// edge sets E-, E+ and node sets S1 (nodes of negative edges only) and
// S2 (walk nodes outside all negative edges).
LinearForm cycle_hypergraph_form(const Hypergraph& g, const SignedClosedWalk& walk);

} // namespace bpo

#pragma once

#include <limits>

#include "bpo/aux_graph.hpp"

namespace bpo {

struct SeparationConfig {
    double violation_tol = 1e-6;
    double feas_tol = 1e-7;
    // Twin paths not shorter than this are ignored during the search; +inf
    // searches the whole graph so the true minimum twin-path length is exact.
    double length_cutoff = 1.0;
    int max_cuts = std::numeric_limits<int>::max();
    int threads = 0; // 0 = hardware concurrency
};

// Twin shortest path: endpoints differ exactly in the sign component.
struct TwinPath {
    int source = -1;
    int target = -1;
    std::vector<int> arcs; // aux edge indices from source to target
    double total_length = 0.0;
};

// Rebuilds the odd signed closed walk encoded by a twin path, using the
// stored argmin witness of every traversed arc.
SignedClosedWalk reconstruct_walk(const AuxGraph& aux, const TwinPath& path);

// Sum of the witness building blocks along the path, as a >= 1 cut.  Equals
// the walk's length function whenever the witness intersections coincide with
// the actual corner intersections.
Cut path_block_cut(const AuxGraph& aux, const TwinPath& path);

struct ViolatedBetaCut {
    Cut cut;
    // Present when the twin path rebuilt into a Definition-1-valid walk; empty
    // for the rare paths whose interned corner sets understate the actual edge
    // intersections, where the block-sum cut is emitted directly.
    std::optional<SignedClosedWalk> walk;
    double violation = 0.0;
    double path_length = 0.0;
};

struct BetaCycleSeparation {
    std::vector<ViolatedBetaCut> cuts; // deduplicated, sorted by violation desc
    double min_twin_path_length = std::numeric_limits<double>::infinity();
    int fallback_cuts = 0;
};

BetaCycleSeparation separate_simple_odd_beta_cycle(const Hypergraph& g, const DensePoint& z,
                                                   const SeparationConfig& config = {},
                                                   const TripleSet* triples = nullptr);

// Exhaustive enumeration of violated flower inequalities with at most
// max_neighbors (1 or 2) neighbors, sorted by violation descending.
std::vector<Cut> separate_flowers(const Hypergraph& g, const DensePoint& z, int max_neighbors,
                                  double violation_tol = 1e-6);

// All violated linearization inequalities, sorted by violation descending.
std::vector<Cut> separate_standard(const Hypergraph& g, const DensePoint& z,
                                   double violation_tol = 1e-6);

} // namespace bpo

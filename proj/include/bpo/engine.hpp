#pragma once

#include <optional>

#include "bpo/lp.hpp"
#include "bpo/separation.hpp"

namespace bpo {

enum class Phase { standard, flower_one, flower_two, beta_cycle };

std::string to_string(Phase phase);

struct PhaseConfig {
    std::vector<Phase> phases{Phase::standard, Phase::flower_one, Phase::flower_two,
                              Phase::beta_cycle};
    // When set, the z_v >= z_e inequalities are separated lazily instead of
    // being installed upfront.
    bool lazy_standard = false;
    int max_rounds_per_phase = 2000;
    int max_cuts_per_round = 200;
    double violation_tol = 1e-6;
    double feas_tol = 1e-7;
    int threads = 0;
    LpConfig lp;
};

struct PhaseReport {
    Phase phase = Phase::standard;
    double bound = 0.0;
    int rounds = 0;
    int cuts_added = 0;
    double seconds = 0.0;
    std::optional<double> gap_pct;
    bool round_cap_hit = false;
};

struct BoundReport {
    std::string instance;
    Sense sense = Sense::minimize;
    std::optional<double> reference;
    std::vector<PhaseReport> phases;
    std::vector<Cut> cuts; // every cut added across all phases
    DensePoint final_point;
    double final_bound = 0.0;
};

// Phase-ordered cutting-plane loop: per phase, solve the LP, add violated
// inequalities of the phase's family until none remain, then record the bound.
// The beta-cycle phase re-runs the earlier separators each round so that only
// certified flower-relaxation points reach the auxiliary graph.
BoundReport run(const Instance& inst, const PhaseConfig& config,
                std::optional<double> reference = std::nullopt);

// 100 * |bound - reference| / |reference|.
double compute_gap(double bound, double reference, Sense sense);

std::string report_text(const BoundReport& report);
std::string report_json(const BoundReport& report);

} // namespace bpo

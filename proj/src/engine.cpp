#include "bpo/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace bpo {

std::string to_string(Phase phase) {
    switch (phase) {
    case Phase::standard: return "standard";
    case Phase::flower_one: return "flower-1";
    case Phase::flower_two: return "flower-2";
    case Phase::beta_cycle: return "beta-cycle";
    }
    return "?";
}

double compute_gap(double bound, double reference, Sense) {
    if (reference == 0.0)
        throw ZeroReference("gap undefined for reference 0");
    return 100.0 * std::abs(bound - reference) / std::abs(reference);
}

namespace {

void check_phase_order(const std::vector<Phase>& phases) {
    bool f1 = false, f2 = false;
    for (Phase p : phases) {
        if (p == Phase::flower_one)
            f1 = true;
        if (p == Phase::flower_two)
            f2 = true;
        if (p == Phase::beta_cycle && !(f1 && f2))
            throw PhaseOrderError(
                "beta-cycle phase requires both flower phases to run before it");
    }
}

DensePoint split_point(const std::vector<double>& values, int node_count, int edge_count) {
    DensePoint z;
    z.node_vals.assign(values.begin(), values.begin() + node_count);
    z.edge_vals.assign(values.begin() + node_count, values.begin() + node_count + edge_count);
    return z;
}

} // namespace

BoundReport run(const Instance& inst, const PhaseConfig& config,
                std::optional<double> reference) {
    check_phase_order(config.phases);
    const Hypergraph& g = inst.hypergraph;
    const int n = g.node_count();

    BoundReport report;
    report.instance = inst.name;
    report.sense = inst.sense;
    report.reference = reference;

    LpModel model = instance_model(inst);
    std::vector<Cut> base = standard_cuts(g);
    for (const Cut& cut : base)
        if (cut.family == CutFamily::standard_2 ||
            (cut.family == CutFamily::standard_1 && !config.lazy_standard))
            model.add_row(cut.form, cut.bound, n);
    SimplexSolver solver(model, config.lp);

    TripleSet triples; // built once, lazily, for the beta-cycle phase
    bool triples_ready = false;

    SeparationConfig sep;
    sep.violation_tol = config.violation_tol;
    sep.feas_tol = config.feas_tol;
    sep.max_cuts = config.max_cuts_per_round;
    sep.threads = config.threads;

    for (Phase phase : config.phases) {
        PhaseReport pr;
        pr.phase = phase;
        auto started = std::chrono::steady_clock::now();
        for (;;) {
            if (pr.rounds >= config.max_rounds_per_phase) {
                pr.round_cap_hit = true;
                break;
            }
            LpSolution sol = solver.solve();
            if (sol.status == LpStatus::iteration_limit)
                throw IterationLimit("LP iteration limit during phase " + to_string(phase));
            if (sol.status != LpStatus::optimal)
                throw NumericalFailure("relaxation LP reported infeasible");
            pr.bound = sol.objective;
            report.final_point = split_point(sol.values, n, g.edge_count());

            std::vector<Cut> violated;
            const DensePoint& z = report.final_point;
            if (config.lazy_standard)
                violated = separate_standard(g, z, config.violation_tol);
            if (violated.empty()) {
                switch (phase) {
                case Phase::standard:
                    break;
                case Phase::flower_one:
                    violated = separate_flowers(g, z, 1, config.violation_tol);
                    break;
                case Phase::flower_two:
                    violated = separate_flowers(g, z, 2, config.violation_tol);
                    break;
                case Phase::beta_cycle: {
                    violated = separate_flowers(g, z, 2, config.violation_tol);
                    if (violated.empty()) {
                        if (!triples_ready) {
                            triples = enumerate_triples(g);
                            triples_ready = true;
                        }
                        auto beta = separate_simple_odd_beta_cycle(g, z, sep, &triples);
                        for (const ViolatedWalk& vw : beta.walks)
                            violated.push_back(simple_odd_beta_cycle_cut(g, vw.walk));
                    }
                    break;
                }
                }
            }
            if (violated.empty())
                break;
            int added = 0;
            for (const Cut& cut : violated) {
                if (added >= config.max_cuts_per_round)
                    break;
                solver.add_row(cut.form, cut.bound, n);
                report.cuts.push_back(cut);
                ++added;
            }
            pr.cuts_added += added;
            ++pr.rounds;
        }
        pr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                         .count();
        if (reference && *reference != 0.0)
            pr.gap_pct = compute_gap(pr.bound, *reference, inst.sense);
        report.final_bound = pr.bound;
        report.phases.push_back(std::move(pr));
    }
    return report;
}

std::string report_text(const BoundReport& report) {
    std::ostringstream os;
    os << "instance: " << report.instance << '\n';
    os << "sense: " << (report.sense == Sense::minimize ? "min" : "max") << '\n';
    if (report.reference)
        os << "reference: " << *report.reference << '\n';
    for (const PhaseReport& pr : report.phases) {
        os << "phase: " << to_string(pr.phase) << "  bound: " << pr.bound
           << "  rounds: " << pr.rounds << "  cuts: " << pr.cuts_added
           << "  seconds: " << pr.seconds;
        if (pr.gap_pct)
            os << "  gap: " << *pr.gap_pct;
        if (pr.round_cap_hit)
            os << "  round-cap: hit";
        os << '\n';
    }
    return os.str();
}

std::string report_json(const BoundReport& report) {
    nlohmann::json j;
    j["instance"] = report.instance;
    j["sense"] = report.sense == Sense::minimize ? "min" : "max";
    if (report.reference)
        j["reference"] = *report.reference;
    j["final_bound"] = report.final_bound;
    j["phases"] = nlohmann::json::array();
    for (const PhaseReport& pr : report.phases) {
        nlohmann::json p;
        p["phase"] = to_string(pr.phase);
        p["bound"] = pr.bound;
        p["rounds"] = pr.rounds;
        p["cuts_added"] = pr.cuts_added;
        p["seconds"] = pr.seconds;
        if (pr.gap_pct)
            p["gap_pct"] = *pr.gap_pct;
        p["round_cap_hit"] = pr.round_cap_hit;
        j["phases"].push_back(p);
    }
    return j.dump(2) + "\n";
}

} // namespace bpo

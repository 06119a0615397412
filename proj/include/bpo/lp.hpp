#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "bpo/linear_form.hpp"
#include "bpo/polynomial.hpp"

namespace bpo {

struct LpConfig {
    double feas_tol = 1e-7;
    double opt_tol = 1e-7;
    double zero_pivot = 1e-10;
    long long max_iterations = 1000000;
    int recompute_every = 200; // basics recomputed from scratch this often
    int stall_limit = 1000;    // degenerate pivots before Bland's rule kicks in
};

enum class LpStatus { optimal, infeasible, iteration_limit };

struct LpSolution {
    LpStatus status = LpStatus::optimal;
    double objective = 0.0; // in the model's sense, includes the constant
    std::vector<double> values;
    long long iterations = 0;
};

// Bounded-variable LP over rows of the form coeffs . x >= bound.
struct LpModel {
    Sense sense = Sense::minimize;
    std::vector<double> objective;
    double objective_constant = 0.0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<std::string> names;

    struct Row {
        std::vector<std::pair<int, double>> coeffs;
        double bound = 0.0;
    };
    std::vector<Row> rows;

    int var_count() const { return static_cast<int>(objective.size()); }
    int add_var(const std::string& name, double obj = 0.0, double lo = 0.0, double hi = 1.0);
    void add_row(std::vector<std::pair<int, double>> coeffs, double bound);
    // Maps node ids to columns [0, node_count) and edge ids past them.
    void add_row(const LinearForm& form, long long bound, int node_count);
};

// Builds the variable layout z_v (nodes first) then z_e for an instance,
// with the instance objective; no rows.
LpModel instance_model(const Instance& inst);

LpSolution solve(const LpModel& model, const LpConfig& config = {});

// Standard LP-file text (objective, constraints, bounds sections).
std::string export_lp(const LpModel& model);

// Incremental simplex: keeps the basis across added rows so that cutting-plane
// loops re-solve cheaply.
class SimplexSolver {
public:
    explicit SimplexSolver(const LpModel& model, LpConfig config = {});
    ~SimplexSolver();
    SimplexSolver(SimplexSolver&&) noexcept;
    SimplexSolver& operator=(SimplexSolver&&) noexcept;

    void add_row(std::vector<std::pair<int, double>> coeffs, double bound);
    void add_row(const LinearForm& form, long long bound, int node_count);
    LpSolution solve();

    int row_count() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace bpo

#include "bpo/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bpo {

int LpModel::add_var(const std::string& name, double obj, double lo, double hi) {
    objective.push_back(obj);
    lower.push_back(lo);
    upper.push_back(hi);
    names.push_back(name);
    return static_cast<int>(objective.size()) - 1;
}

void LpModel::add_row(std::vector<std::pair<int, double>> coeffs, double bound) {
    rows.push_back(Row{std::move(coeffs), bound});
}

void LpModel::add_row(const LinearForm& form, long long bound, int node_count) {
    std::vector<std::pair<int, double>> coeffs;
    coeffs.reserve(form.node_coeffs.size() + form.edge_coeffs.size());
    for (auto [v, c] : form.node_coeffs)
        coeffs.emplace_back(v, static_cast<double>(c));
    for (auto [e, c] : form.edge_coeffs)
        coeffs.emplace_back(node_count + e, static_cast<double>(c));
    add_row(std::move(coeffs), static_cast<double>(bound - form.constant));
}

LpModel instance_model(const Instance& inst) {
    LpModel model;
    model.sense = inst.sense;
    model.objective_constant = inst.constant;
    const auto& g = inst.hypergraph;
    for (NodeId v = 0; v < g.node_count(); ++v)
        model.add_var("zv" + std::to_string(v), inst.node_profit[v]);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        model.add_var("ze" + std::to_string(e), inst.edge_profit[e]);
    return model;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarState : unsigned char { at_lower, at_upper, basic };

struct Column {
    std::vector<std::pair<int, double>> entries; // (row, coeff)
    double lo = 0.0;
    double up = kInf;
    double cost = 0.0;   // phase-2 cost (minimization)
    bool artificial = false;
};

} // namespace

struct SimplexSolver::Impl {
    LpConfig config;
    Sense sense = Sense::minimize;
    double obj_constant = 0.0;
    int nstruct = 0;

    std::vector<Column> cols;
    std::vector<double> row_bound;
    std::vector<int> basis;          // per row: basic column
    std::vector<VarState> state;     // per column
    std::vector<double> nonbasic_val;
    std::vector<double> xb;          // per row: value of the basic column
    std::vector<double> binv;        // row-major m x m
    long long total_iterations = 0;
    bool basis_ready = false;

    int m() const { return static_cast<int>(row_bound.size()); }
    double* binv_row(int i) { return binv.data() + static_cast<std::size_t>(i) * m(); }

    explicit Impl(const LpModel& model, LpConfig cfg) : config(cfg) {
        sense = model.sense;
        obj_constant = model.objective_constant;
        nstruct = model.var_count();
        const double sign = sense == Sense::maximize ? -1.0 : 1.0;
        cols.resize(nstruct);
        for (int j = 0; j < nstruct; ++j) {
            cols[j].lo = model.lower.empty() ? 0.0 : model.lower[j];
            cols[j].up = model.upper.empty() ? 1.0 : model.upper[j];
            cols[j].cost = sign * model.objective[j];
        }
        state.assign(nstruct, VarState::at_lower);
        nonbasic_val.assign(nstruct, 0.0);
        for (int j = 0; j < nstruct; ++j) {
            // Start at the finite bound closer to 1; keeps the all-ones point as
            // the initial vertex for relaxation models, which is always feasible.
            if (cols[j].up < kInf) {
                state[j] = VarState::at_upper;
                nonbasic_val[j] = cols[j].up;
            } else {
                nonbasic_val[j] = cols[j].lo;
            }
        }
        for (const auto& row : model.rows)
            append_row(row.coeffs, row.bound);
    }

    int add_column(Column col) {
        cols.push_back(std::move(col));
        state.push_back(VarState::at_lower);
        nonbasic_val.push_back(cols.back().lo);
        return static_cast<int>(cols.size()) - 1;
    }

    // Appends a row with its slack column basic; extends the basis inverse when
    // one is already built.
    void append_row(const std::vector<std::pair<int, double>>& coeffs, double bound) {
        const int i = m();
        row_bound.push_back(bound);
        for (auto [j, a] : coeffs)
            cols[j].entries.emplace_back(i, a);
        Column slack;
        slack.entries = {{i, -1.0}};
        slack.lo = 0.0;
        slack.up = kInf;
        int sj = add_column(std::move(slack));
        if (!basis_ready) {
            basis.push_back(sj);
            state[sj] = VarState::basic;
            return;
        }
        // B_new = [[B, 0], [C, -1]] with C the new row restricted to the old
        // basic columns; the extended inverse gains bottom row [C Binv, -1].
        const int old_m = i;
        std::vector<double> newbinv(static_cast<std::size_t>(i + 1) * (i + 1), 0.0);
        for (int r = 0; r < old_m; ++r)
            std::copy(binv.begin() + static_cast<std::size_t>(r) * old_m,
                      binv.begin() + static_cast<std::size_t>(r) * old_m + old_m,
                      newbinv.begin() + static_cast<std::size_t>(r) * (i + 1));
        std::vector<int> pos_of_col(cols.size(), -1);
        for (int r = 0; r < old_m; ++r)
            pos_of_col[basis[r]] = r;
        std::vector<double> bottom(old_m, 0.0);
        for (auto [j, a] : coeffs) {
            int p = pos_of_col[j];
            if (p < 0)
                continue;
            const double* row = binv.data() + static_cast<std::size_t>(p) * old_m;
            for (int t = 0; t < old_m; ++t)
                bottom[t] += a * row[t];
        }
        double* last = newbinv.data() + static_cast<std::size_t>(i) * (i + 1);
        for (int t = 0; t < old_m; ++t)
            last[t] = bottom[t]; // -D^-1 C Binv with D = -1
        last[i] = -1.0;
        binv = std::move(newbinv);
        basis.push_back(sj);
        state[sj] = VarState::basic;
        xb.push_back(0.0);
        recompute_xb();
    }

    void build_initial_basis() {
        const int rows = m();
        binv.assign(static_cast<std::size_t>(rows) * rows, 0.0);
        for (int i = 0; i < rows; ++i)
            binv_row(i)[i] = -1.0; // slack columns
        xb.assign(rows, 0.0);
        basis_ready = true;
        recompute_xb();
    }

    void recompute_xb() {
        const int rows = m();
        std::vector<double> rhs(row_bound);
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (state[j] == VarState::basic)
                continue;
            double v = nonbasic_val[j];
            if (v == 0.0)
                continue;
            for (auto [i, a] : cols[j].entries)
                rhs[i] -= a * v;
        }
        for (int i = 0; i < rows; ++i) {
            const double* row = binv_row(i);
            double acc = 0.0;
            for (int t = 0; t < rows; ++t)
                acc += row[t] * rhs[t];
            xb[i] = acc;
        }
    }

    // Replaces basic slacks that start below zero by artificial columns so the
    // phase-1 problem starts feasible.
    bool install_artificials() {
        bool any = false;
        for (int i = 0; i < m(); ++i) {
            int b = basis[i];
            if (!cols[b].artificial && cols[b].entries.size() == 1 &&
                cols[b].entries[0].first == i && xb[i] < -config.feas_tol &&
                cols[b].entries[0].second == -1.0 && cols[b].lo == 0.0) {
                Column art;
                art.entries = {{i, 1.0}};
                art.lo = 0.0;
                art.up = kInf;
                art.cost = 0.0;
                art.artificial = true;
                int aj = add_column(std::move(art));
                state[b] = VarState::at_lower;
                nonbasic_val[b] = 0.0;
                state[aj] = VarState::basic;
                basis[i] = aj;
                // Basis column flips from -e_i to +e_i: negate row i of the inverse.
                double* row = binv_row(i);
                for (int t = 0; t < m(); ++t)
                    row[t] = -row[t];
                xb[i] = -xb[i];
                any = true;
            } else if (cols[b].artificial && xb[i] < -config.feas_tol) {
                // Cannot happen: artificial basics only ever decrease to zero.
                throw NumericalFailure("negative artificial in basis");
            }
        }
        return any;
    }

    std::vector<double> btran_costs(bool phase1) const {
        const int rows = static_cast<int>(row_bound.size());
        std::vector<double> y(rows, 0.0);
        for (int i = 0; i < rows; ++i) {
            const Column& col = cols[basis[i]];
            double c = phase1 ? (col.artificial ? 1.0 : 0.0) : col.cost;
            if (c == 0.0)
                continue;
            const double* row = binv.data() + static_cast<std::size_t>(i) * rows;
            for (int t = 0; t < rows; ++t)
                y[t] += c * row[t];
        }
        return y;
    }

    double reduced_cost(int j, const std::vector<double>& y, bool phase1) const {
        const Column& col = cols[j];
        double d = phase1 ? (col.artificial ? 1.0 : 0.0) : col.cost;
        for (auto [i, a] : col.entries)
            d -= y[i] * a;
        return d;
    }

    std::vector<double> ftran(int j) {
        const int rows = m();
        std::vector<double> u(rows, 0.0);
        for (auto [i, a] : cols[j].entries) {
            // Column i of the row-major inverse.
            for (int r = 0; r < rows; ++r)
                u[r] += a * binv[static_cast<std::size_t>(r) * rows + i];
        }
        return u;
    }

    void update_binv(int r, const std::vector<double>& u) {
        const int rows = m();
        double piv = u[r];
        double* prow = binv_row(r);
        double inv = 1.0 / piv;
        for (int t = 0; t < rows; ++t)
            prow[t] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || u[i] == 0.0)
                continue;
            double f = u[i];
            double* row = binv_row(i);
            for (int t = 0; t < rows; ++t)
                row[t] -= f * prow[t];
        }
    }

    double phase_objective(bool phase1) const {
        double obj = 0.0;
        for (int i = 0; i < m(); ++i) {
            const Column& col = cols[basis[i]];
            double c = phase1 ? (col.artificial ? 1.0 : 0.0) : col.cost;
            obj += c * xb[i];
        }
        if (!phase1)
            for (int j = 0; j < static_cast<int>(cols.size()); ++j)
                if (state[j] != VarState::basic)
                    obj += cols[j].cost * nonbasic_val[j];
        return obj;
    }

    // Runs the simplex loop for one phase.  Returns false on iteration limit.
    bool run_phase(bool phase1, long long iteration_budget) {
        int since_recompute = 0;
        int stall = 0;
        bool bland = false;
        double last_obj = phase_objective(phase1);
        for (long long iter = 0; iter < iteration_budget; ++iter, ++total_iterations) {
            if (++since_recompute >= config.recompute_every) {
                recompute_xb();
                since_recompute = 0;
            }
            std::vector<double> y = btran_costs(phase1);

            int entering = -1;
            int enter_dir = +1; // +1: increase from lower, -1: decrease from upper
            double best_score = config.opt_tol;
            for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
                if (state[j] == VarState::basic)
                    continue;
                const Column& col = cols[j];
                if (col.up - col.lo <= 0.0)
                    continue;
                if (col.artificial && !phase1)
                    continue;
                double d = reduced_cost(j, y, phase1);
                double score = 0.0;
                int dir = 0;
                if (state[j] == VarState::at_lower && d < -config.opt_tol) {
                    score = -d;
                    dir = +1;
                } else if (state[j] == VarState::at_upper && d > config.opt_tol) {
                    score = d;
                    dir = -1;
                } else {
                    continue;
                }
                if (bland) {
                    entering = j;
                    enter_dir = dir;
                    break;
                }
                if (score > best_score) {
                    best_score = score;
                    entering = j;
                    enter_dir = dir;
                }
            }
            if (entering < 0)
                return true;

            std::vector<double> u = ftran(entering);
            const int rows = m();
            double t_best = cols[entering].up - cols[entering].lo; // bound flip
            int leave_pos = -1;
            double leave_pivot = 0.0;
            int leave_to_upper = 0;
            for (int p = 0; p < rows; ++p) {
                double rate = -enter_dir * u[p];
                if (std::abs(rate) <= config.zero_pivot)
                    continue;
                const Column& bc = cols[basis[p]];
                double lim;
                int to_upper;
                if (rate < 0.0) {
                    lim = (xb[p] - bc.lo) / (-rate);
                    to_upper = 0;
                } else {
                    if (bc.up >= kInf)
                        continue;
                    lim = (bc.up - xb[p]) / rate;
                    to_upper = 1;
                }
                if (lim < 0.0)
                    lim = 0.0;
                if (lim < t_best - 1e-12 ||
                    (leave_pos >= 0 && lim < t_best + 1e-12 &&
                     std::abs(u[p]) > std::abs(leave_pivot))) {
                    t_best = lim;
                    leave_pos = p;
                    leave_pivot = u[p];
                    leave_to_upper = to_upper;
                }
            }
            if (leave_pos < 0 && !(t_best < kInf))
                throw NumericalFailure("LP unbounded in phase " + std::string(phase1 ? "1" : "2"));

            double delta = enter_dir * t_best;
            if (leave_pos < 0) {
                // Bound flip: the entering variable traverses to its other bound.
                for (int p = 0; p < rows; ++p)
                    xb[p] -= delta * u[p];
                state[entering] =
                    state[entering] == VarState::at_lower ? VarState::at_upper
                                                          : VarState::at_lower;
                nonbasic_val[entering] = state[entering] == VarState::at_lower
                                             ? cols[entering].lo
                                             : cols[entering].up;
            } else {
                int leaving = basis[leave_pos];
                double enter_val = nonbasic_val[entering] + delta;
                for (int p = 0; p < rows; ++p)
                    xb[p] -= delta * u[p];
                state[leaving] = leave_to_upper ? VarState::at_upper : VarState::at_lower;
                nonbasic_val[leaving] = leave_to_upper ? cols[leaving].up : cols[leaving].lo;
                if (cols[leaving].artificial && phase1)
                    cols[leaving].up = 0.0; // never let an artificial re-enter
                basis[leave_pos] = entering;
                state[entering] = VarState::basic;
                update_binv(leave_pos, u);
                xb[leave_pos] = enter_val;
            }

            double obj = phase_objective(phase1);
            if (obj < last_obj - 1e-12) {
                stall = 0;
                bland = false;
            } else if (++stall > config.stall_limit) {
                bland = true;
            }
            last_obj = obj;
        }
        return false;
    }

    LpSolution finish(LpStatus status) {
        LpSolution sol;
        sol.status = status;
        sol.iterations = total_iterations;
        sol.values.assign(nstruct, 0.0);
        for (int j = 0; j < nstruct; ++j)
            if (state[j] != VarState::basic)
                sol.values[j] = nonbasic_val[j];
        for (int i = 0; i < m(); ++i)
            if (basis[i] < nstruct)
                sol.values[basis[i]] = xb[i];
        double obj = obj_constant;
        const double sign = sense == Sense::maximize ? -1.0 : 1.0;
        for (int j = 0; j < nstruct; ++j)
            obj += sign * cols[j].cost * sol.values[j];
        sol.objective = obj;
        return sol;
    }

    void audit_feasibility(const LpSolution& sol) {
        std::vector<double> act(m(), 0.0);
        for (int j = 0; j < nstruct; ++j) {
            double v = sol.values[j];
            if (v == 0.0)
                continue;
            for (auto [i, a] : cols[j].entries)
                act[i] += a * v;
        }
        for (int i = 0; i < m(); ++i)
            if (act[i] < row_bound[i] - 1e-5)
                throw NumericalFailure("optimal point violates row " + std::to_string(i) +
                                       " by " + std::to_string(row_bound[i] - act[i]));
        for (int j = 0; j < nstruct; ++j)
            if (sol.values[j] < cols[j].lo - 1e-7 || sol.values[j] > cols[j].up + 1e-7)
                throw NumericalFailure("optimal point violates a variable bound");
    }

    LpSolution solve() {
        if (!basis_ready)
            build_initial_basis();
        else
            recompute_xb();
        install_artificials();
        bool has_art = false;
        double art_total = 0.0;
        for (int i = 0; i < m(); ++i)
            if (cols[basis[i]].artificial) {
                has_art = true;
                art_total += std::max(0.0, xb[i]);
            }
        if (has_art && art_total > config.feas_tol) {
            if (!run_phase(true, config.max_iterations))
                return finish(LpStatus::iteration_limit);
            double infeas = phase_objective(true);
            if (infeas > 100 * config.feas_tol)
                return finish(LpStatus::infeasible);
        }
        for (auto& col : cols)
            if (col.artificial)
                col.up = 0.0;
        if (!run_phase(false, config.max_iterations))
            return finish(LpStatus::iteration_limit);
        recompute_xb();
        LpSolution sol = finish(LpStatus::optimal);
        audit_feasibility(sol);
        return sol;
    }
};

SimplexSolver::SimplexSolver(const LpModel& model, LpConfig config)
    : impl_(std::make_unique<Impl>(model, config)) {}
SimplexSolver::~SimplexSolver() = default;
SimplexSolver::SimplexSolver(SimplexSolver&&) noexcept = default;
SimplexSolver& SimplexSolver::operator=(SimplexSolver&&) noexcept = default;

void SimplexSolver::add_row(std::vector<std::pair<int, double>> coeffs, double bound) {
    impl_->append_row(coeffs, bound);
}

void SimplexSolver::add_row(const LinearForm& form, long long bound, int node_count) {
    std::vector<std::pair<int, double>> coeffs;
    for (auto [v, c] : form.node_coeffs)
        coeffs.emplace_back(v, static_cast<double>(c));
    for (auto [e, c] : form.edge_coeffs)
        coeffs.emplace_back(node_count + e, static_cast<double>(c));
    impl_->append_row(coeffs, static_cast<double>(bound - form.constant));
}

LpSolution SimplexSolver::solve() { return impl_->solve(); }

int SimplexSolver::row_count() const { return impl_->m(); }

LpSolution solve(const LpModel& model, const LpConfig& config) {
    SimplexSolver solver(model, config);
    return solver.solve();
}

namespace {

std::string lp_term(double coeff, const std::string& name, bool first) {
    std::ostringstream os;
    if (first) {
        os << coeff << " " << name;
    } else if (coeff >= 0) {
        os << " + " << coeff << " " << name;
    } else {
        os << " - " << -coeff << " " << name;
    }
    return os.str();
}

} // namespace

std::string export_lp(const LpModel& model) {
    std::ostringstream os;
    os << (model.sense == Sense::maximize ? "Maximize" : "Minimize") << "\n obj:";
    bool first = true;
    for (int j = 0; j < model.var_count(); ++j) {
        if (model.objective[j] == 0.0)
            continue;
        os << " " << lp_term(model.objective[j], model.names[j], first);
        first = false;
    }
    if (model.objective_constant != 0.0 || first)
        os << (first ? " " : " + ") << model.objective_constant;
    os << "\n";
    if (!model.rows.empty()) {
        os << "Subject To\n";
        for (std::size_t i = 0; i < model.rows.size(); ++i) {
            os << " r" << i << ":";
            bool rf = true;
            for (auto [j, a] : model.rows[i].coeffs) {
                os << " " << lp_term(a, model.names[j], rf);
                rf = false;
            }
            os << " >= " << model.rows[i].bound << "\n";
        }
    }
    os << "Bounds\n";
    for (int j = 0; j < model.var_count(); ++j)
        os << " " << model.lower[j] << " <= " << model.names[j] << " <= " << model.upper[j]
           << "\n";
    os << "End\n";
    return os.str();
}

} // namespace bpo

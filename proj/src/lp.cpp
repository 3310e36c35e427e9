#include <gent/lp.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gent {

Rational evaluate(const SparseForm& form, const SetFunction& f) {
    Rational sum = 0;
    for (const auto& [subset, coeff] : form) sum += coeff * f(subset);
    return sum;
}

void LinearConstraint::add(std::uint32_t subset, Rational coeff) {
    if (subset == 0 || coeff == 0) return;
    terms.emplace_back(subset, std::move(coeff));
}

void LinearConstraint::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseForm merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.second == 0; }),
                 merged.end());
    terms = std::move(merged);
}

LPStats& lp_stats() {
    static LPStats stats;
    return stats;
}

namespace {

enum class VarKind { Free, NonNeg, NonPos };

struct CoreRow {
    std::vector<std::pair<int, Rational>> terms;  // var index -> coeff
    Relation rel = Relation::GreaterEq;
    Rational rhs = 0;
};

struct CoreLP {
    int num_vars = 0;
    std::vector<VarKind> kinds;
    std::vector<CoreRow> rows;
    std::vector<Rational> objective;  // dense, size num_vars
    Sense sense = Sense::Maximize;
};

struct CoreResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> duals;
};

// Exact optimality certificate: primal feasibility, dual feasibility and
// sign conditions, and equality of both objectives. Throws on violation.
void verify_certificate(const CoreLP& lp, const std::vector<Rational>& x,
                        const std::vector<Rational>& y, const Rational& value) {
    const bool maximize = lp.sense == Sense::Maximize;
    Rational primal_obj = 0;
    for (int k = 0; k < lp.num_vars; ++k) primal_obj += lp.objective[k] * x[k];
    if (primal_obj != value) throw std::logic_error("LP verify: objective mismatch");

    for (int k = 0; k < lp.num_vars; ++k) {
        if (lp.kinds[k] == VarKind::NonNeg && x[k] < 0)
            throw std::logic_error("LP verify: variable sign violated");
        if (lp.kinds[k] == VarKind::NonPos && x[k] > 0)
            throw std::logic_error("LP verify: variable sign violated");
    }

    Rational dual_obj = 0;
    std::vector<Rational> aty(lp.num_vars);
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        const CoreRow& row = lp.rows[i];
        Rational lhs = 0;
        for (const auto& [k, c] : row.terms) lhs += c * x[k];
        bool ok = row.rel == Relation::LessEq      ? lhs <= row.rhs
                  : row.rel == Relation::GreaterEq ? lhs >= row.rhs
                                                   : lhs == row.rhs;
        if (!ok) throw std::logic_error("LP verify: primal constraint violated");

        const Rational& yi = y[i];
        if (row.rel == Relation::LessEq && (maximize ? yi < 0 : yi > 0))
            throw std::logic_error("LP verify: dual sign violated");
        if (row.rel == Relation::GreaterEq && (maximize ? yi > 0 : yi < 0))
            throw std::logic_error("LP verify: dual sign violated");
        dual_obj += yi * row.rhs;
        for (const auto& [k, c] : row.terms) aty[k] += c * yi;
    }
    if (dual_obj != value) throw std::logic_error("LP verify: duality gap");

    for (int k = 0; k < lp.num_vars; ++k) {
        Rational reduced = lp.objective[k] - aty[k];
        bool ok;
        switch (lp.kinds[k]) {
            case VarKind::NonNeg: ok = maximize ? reduced <= 0 : reduced >= 0; break;
            case VarKind::NonPos: ok = maximize ? reduced >= 0 : reduced <= 0; break;
            default: ok = reduced == 0;
        }
        if (!ok) throw std::logic_error("LP verify: dual feasibility violated");
    }
}

class SimplexTableau {
public:
    explicit SimplexTableau(const CoreLP& lp) : lp_(lp) {
        build();
    }

    CoreResult solve() {
        if (has_artificials_) {
            set_phase1_objective();
            if (!run()) throw std::logic_error("phase-1 objective cannot be unbounded");
            if (obj_rhs_ != 0) return {LPStatus::Infeasible, 0, {}, {}};
            drive_out_artificials();
        }
        set_phase2_objective();
        if (!run()) return {LPStatus::Unbounded, 0, {}, {}};
        return extract();
    }

private:
    static constexpr long kHardPivotCap = 2000000;

    const CoreLP& lp_;
    int m_ = 0;               // rows
    int ncols_ = 0;
    std::vector<std::vector<Rational>> t_;  // m_ x ncols_
    std::vector<Rational> rhs_;             // size m_
    std::vector<Rational> objrow_;          // z_j - c_j
    Rational obj_rhs_;                      // current objective value
    std::vector<int> basis_;                // basis[r] = column
    std::vector<int> col_var_;              // structural: var index, else -1
    std::vector<int> col_sign_;             // structural sign (+1/-1)
    std::vector<bool> blocked_;             // artificial columns in phase 2
    std::vector<bool> artificial_;
    std::vector<int> id_col_;               // per row: its initial identity column
    std::vector<bool> flipped_;             // row negated during standardization
    std::vector<Rational> costs_;           // phase-2 cost per column
    bool has_artificials_ = false;
    bool phase2_ = false;

    // maximized objective regardless of lp_.sense
    Rational var_cost(int k) const {
        return lp_.sense == Sense::Maximize ? lp_.objective[k] : -lp_.objective[k];
    }

    void build() {
        m_ = int(lp_.rows.size());
        // structural columns
        for (int k = 0; k < lp_.num_vars; ++k) {
            switch (lp_.kinds[k]) {
                case VarKind::NonNeg: add_structural(k, 1); break;
                case VarKind::NonPos: add_structural(k, -1); break;
                case VarKind::Free:
                    add_structural(k, 1);
                    add_structural(k, -1);
                    break;
            }
        }
        int nstruct = int(col_var_.size());
        // identity columns
        id_col_.assign(m_, -1);
        flipped_.assign(m_, false);
        std::vector<int> surplus_col(m_, -1);
        int next = nstruct;
        std::vector<Relation> rels(m_);
        for (int i = 0; i < m_; ++i) {
            Relation rel = lp_.rows[i].rel;
            if (lp_.rows[i].rhs < 0) {
                flipped_[i] = true;
                if (rel == Relation::LessEq)
                    rel = Relation::GreaterEq;
                else if (rel == Relation::GreaterEq)
                    rel = Relation::LessEq;
            }
            rels[i] = rel;
            if (rel == Relation::LessEq) {
                id_col_[i] = next++;  // slack
            } else if (rel == Relation::GreaterEq) {
                surplus_col[i] = next++;
                id_col_[i] = next++;  // artificial
                has_artificials_ = true;
            } else {
                id_col_[i] = next++;  // artificial
                has_artificials_ = true;
            }
        }
        ncols_ = next;
        col_var_.resize(ncols_, -1);
        col_sign_.resize(ncols_, 0);
        artificial_.assign(ncols_, false);
        blocked_.assign(ncols_, false);

        t_.assign(m_, std::vector<Rational>(ncols_));
        rhs_.assign(m_, Rational(0));
        basis_.assign(m_, -1);
        for (int i = 0; i < m_; ++i) {
            const CoreRow& row = lp_.rows[i];
            int sgn = flipped_[i] ? -1 : 1;
            for (const auto& [k, c] : row.terms) {
                Rational cc = sgn * c;
                for (int j : struct_cols_of_var_[k]) t_[i][j] = cc * col_sign_[j];
            }
            rhs_[i] = sgn * row.rhs;
            if (rels[i] == Relation::LessEq) {
                t_[i][id_col_[i]] = 1;
            } else if (rels[i] == Relation::GreaterEq) {
                t_[i][surplus_col[i]] = -1;
                t_[i][id_col_[i]] = 1;
                artificial_[id_col_[i]] = true;
            } else {
                t_[i][id_col_[i]] = 1;
                artificial_[id_col_[i]] = true;
            }
            basis_[i] = id_col_[i];
        }
    }

    std::vector<std::vector<int>> struct_cols_of_var_;

    void add_structural(int var, int sign) {
        if (int(struct_cols_of_var_.size()) <= var) struct_cols_of_var_.resize(var + 1);
        struct_cols_of_var_[var].push_back(int(col_var_.size()));
        col_var_.push_back(var);
        col_sign_.push_back(sign);
    }

    void set_objective_from_costs() {
        objrow_.assign(ncols_, Rational(0));
        obj_rhs_ = 0;
        for (int j = 0; j < ncols_; ++j) objrow_[j] = -costs_[j];
        for (int i = 0; i < m_; ++i) {
            const Rational& cb = costs_[basis_[i]];
            if (cb == 0) continue;
            for (int j = 0; j < ncols_; ++j)
                if (t_[i][j] != 0) objrow_[j] += cb * t_[i][j];
            obj_rhs_ += cb * rhs_[i];
        }
    }

    void set_phase1_objective() {
        phase2_ = false;
        costs_.assign(ncols_, Rational(0));
        for (int j = 0; j < ncols_; ++j)
            if (artificial_[j]) costs_[j] = -1;
        set_objective_from_costs();
    }

    void set_phase2_objective() {
        phase2_ = true;
        for (int j = 0; j < ncols_; ++j) blocked_[j] = artificial_[j];
        costs_.assign(ncols_, Rational(0));
        for (int j = 0; j < ncols_; ++j)
            if (col_var_[j] >= 0) costs_[j] = Rational(col_sign_[j]) * var_cost(col_var_[j]);
        set_objective_from_costs();
    }

    // Returns false on unboundedness.
    bool run() {
        long pivots = 0;
        const long dantzig_limit = 2000 + 40L * m_;
        while (true) {
            int enter = -1;
            if (pivots < dantzig_limit) {
                const Rational* best = nullptr;
                for (int j = 0; j < ncols_; ++j) {
                    if (blocked_[j] || objrow_[j] >= 0) continue;
                    if (!best || objrow_[j] < *best) {
                        best = &objrow_[j];
                        enter = j;
                    }
                }
            } else {
                for (int j = 0; j < ncols_; ++j)
                    if (!blocked_[j] && objrow_[j] < 0) {
                        enter = j;
                        break;
                    }
            }
            if (enter < 0) return true;  // optimal

            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / t_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded

            pivot(leave, enter);
            if (++pivots > kHardPivotCap)
                throw std::logic_error("simplex pivot cap exceeded");
        }
    }

    void pivot(int r, int e) {
        Rational piv = t_[r][e];
        std::vector<int> nz;
        nz.reserve(ncols_ / 4);
        for (int j = 0; j < ncols_; ++j) {
            if (t_[r][j] == 0) continue;
            if (piv != 1) t_[r][j] /= piv;
            nz.push_back(j);
        }
        if (piv != 1) rhs_[r] /= piv;
        bool rhs_nz = rhs_[r] != 0;

        static thread_local Rational tmp;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            const Rational f = t_[i][e];
            if (f == 0) continue;
            for (int j : nz) {
                tmp = f;
                tmp *= t_[r][j];
                t_[i][j] -= tmp;
            }
            if (rhs_nz) {
                tmp = f;
                tmp *= rhs_[r];
                rhs_[i] -= tmp;
            }
        }
        const Rational f = objrow_[e];
        if (f != 0) {
            for (int j : nz) {
                tmp = f;
                tmp *= t_[r][j];
                objrow_[j] -= tmp;
            }
            if (rhs_nz) {
                tmp = f;
                tmp *= rhs_[r];
                obj_rhs_ -= tmp;
            }
        }
        basis_[r] = e;
    }

    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (!artificial_[basis_[i]]) continue;
            int col = -1;
            for (int j = 0; j < ncols_; ++j)
                if (!artificial_[j] && t_[i][j] != 0) {
                    col = j;
                    break;
                }
            // Basic artificials sit at zero here, so this pivot preserves
            // feasibility; a row with no usable column is redundant and inert.
            if (col >= 0) pivot(i, col);
        }
    }

    CoreResult extract() {
        CoreResult res;
        res.status = LPStatus::Optimal;
        res.x.assign(lp_.num_vars, Rational(0));
        for (int i = 0; i < m_; ++i) {
            int j = basis_[i];
            if (col_var_[j] >= 0) res.x[col_var_[j]] += Rational(col_sign_[j]) * rhs_[i];
        }
        res.duals.assign(m_, Rational(0));
        for (int i = 0; i < m_; ++i) {
            Rational y = objrow_[id_col_[i]];
            if (flipped_[i]) y = -y;
            res.duals[i] = y;
        }
        res.value = obj_rhs_;
        if (lp_.sense == Sense::Minimize) {
            res.value = -res.value;
            for (auto& y : res.duals) y = -y;
        }
        return res;
    }
};

CoreResult core_solve(const CoreLP& lp) {
    SimplexTableau tab(lp);
    CoreResult res = tab.solve();
    if (res.status == LPStatus::Optimal) {
        lp_stats().optimal_solves.fetch_add(1, std::memory_order_relaxed);
        verify_certificate(lp, res.x, res.duals, res.value);
        lp_stats().verified_solves.fetch_add(1, std::memory_order_relaxed);
    }
    return res;
}

// Variable collection: subsets referenced by constraints or objective,
// ascending; position in the vector is the core variable index.
std::vector<std::uint32_t> collect_vars(const LinearProgram& lp) {
    std::vector<std::uint32_t> vars;
    for (const auto& c : lp.constraints)
        for (const auto& [subset, coeff] : c.terms)
            if (subset) vars.push_back(subset);
    for (const auto& [subset, coeff] : lp.objective)
        if (subset) vars.push_back(subset);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

CoreLP to_core(const LinearProgram& lp, const std::vector<std::uint32_t>& vars) {
    std::map<std::uint32_t, int> index;
    for (size_t i = 0; i < vars.size(); ++i) index[vars[i]] = int(i);
    CoreLP core;
    core.num_vars = int(vars.size());
    core.kinds.assign(core.num_vars, VarKind::Free);
    core.objective.assign(core.num_vars, Rational(0));
    core.sense = lp.sense;
    for (const auto& [subset, coeff] : lp.objective)
        if (subset) core.objective[index.at(subset)] += coeff;
    core.rows.reserve(lp.constraints.size());
    for (const auto& c : lp.constraints) {
        CoreRow row;
        row.rel = c.rel;
        row.rhs = c.rhs;
        std::map<int, Rational> acc;
        for (const auto& [subset, coeff] : c.terms)
            if (subset) acc[index.at(subset)] += coeff;
        for (auto& [k, v] : acc)
            if (v != 0) row.terms.emplace_back(k, std::move(v));
        core.rows.push_back(std::move(row));
    }
    return core;
}

LPResult from_core(const LinearProgram& lp, const std::vector<std::uint32_t>& vars,
                   const CoreResult& res) {
    LPResult out;
    out.status = res.status;
    if (res.status != LPStatus::Optimal) return out;
    out.value = res.value;
    out.primal = SetFunction(lp.ground);
    for (size_t i = 0; i < vars.size(); ++i) out.primal[vars[i]] = res.x[i];
    out.duals = res.duals;
    out.verified = true;
    return out;
}

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
    if (lp.ground < 1 || lp.ground > 13)
        throw std::invalid_argument("LP ground size must be in [1, 13]");
    auto vars = collect_vars(lp);
    if (!vars.empty() && vars.back() >= (std::uint32_t(1) << lp.ground))
        throw std::invalid_argument("constraint subset outside the ground set");
    CoreLP core = to_core(lp, vars);
    return from_core(lp, vars, core_solve(core));
}

LPResult solve_lp_via_dual(const LinearProgram& lp) {
    if (lp.ground < 1 || lp.ground > 13)
        throw std::invalid_argument("LP ground size must be in [1, 13]");
    auto vars = collect_vars(lp);
    if (!vars.empty() && vars.back() >= (std::uint32_t(1) << lp.ground))
        throw std::invalid_argument("constraint subset outside the ground set");
    CoreLP primal = to_core(lp, vars);
    const bool maximize = lp.sense == Sense::Maximize;

    // Dual of (max c'x : Ax {<=,=,>=} b, x free): min b'y with A'y = c and
    // y >= 0 on <= rows, y <= 0 on >= rows, y free on = rows. For a
    // minimization program, dualize the negated objective.
    CoreLP dual;
    dual.num_vars = int(primal.rows.size());
    dual.kinds.resize(dual.num_vars);
    dual.objective.resize(dual.num_vars);
    dual.sense = Sense::Minimize;
    for (int i = 0; i < dual.num_vars; ++i) {
        const CoreRow& row = primal.rows[i];
        dual.kinds[i] = row.rel == Relation::LessEq      ? VarKind::NonNeg
                        : row.rel == Relation::GreaterEq ? VarKind::NonPos
                                                         : VarKind::Free;
        dual.objective[i] = row.rhs;
    }
    dual.rows.assign(primal.num_vars, CoreRow{});
    for (int k = 0; k < primal.num_vars; ++k) {
        dual.rows[k].rel = Relation::Equal;
        dual.rows[k].rhs = maximize ? primal.objective[k] : -primal.objective[k];
    }
    for (int i = 0; i < dual.num_vars; ++i)
        for (const auto& [k, c] : primal.rows[i].terms)
            dual.rows[k].terms.emplace_back(i, c);

    CoreResult dres = core_solve(dual);
    if (dres.status == LPStatus::Unbounded) return {LPStatus::Infeasible, 0, {}, {}, false};
    if (dres.status == LPStatus::Infeasible)
        throw std::logic_error("dual-path solve requires a feasible bounded program");

    CoreResult res;
    res.status = LPStatus::Optimal;
    // The dual's optimal duals are an optimal primal solution, and vice versa.
    // The optimal point is the same for min c'x and max -c'x; the multipliers
    // flip sign with the sense.
    res.x = dres.duals;
    res.duals = dres.x;
    res.value = maximize ? dres.value : -dres.value;
    if (!maximize)
        for (auto& y : res.duals) y = -y;
    lp_stats().optimal_solves.fetch_add(1, std::memory_order_relaxed);
    verify_certificate(primal, res.x, res.duals, res.value);
    lp_stats().verified_solves.fetch_add(1, std::memory_order_relaxed);
    return from_core(lp, vars, res);
}

}  // namespace gent

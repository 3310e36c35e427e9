#include <gent/entropy_bounds.hpp>

#include <map>
#include <stdexcept>

#include <gent/errors.hpp>

namespace gent {

std::vector<LinearConstraint> graph_constraints(const DirectedGraph& g) {
    std::vector<LinearConstraint> out;
    for (int j = 0; j < g.n(); ++j) {
        LinearConstraint c;
        c.rel = Relation::Equal;
        c.add(vertex_bit(j) | g.in_mask(j), 1);
        c.add(g.in_mask(j), -1);
        c.normalize();
        out.push_back(std::move(c));
    }
    for (int i = 0; i < g.n(); ++i) {
        LinearConstraint c;
        c.rel = Relation::LessEq;
        c.rhs = 1;
        c.add(vertex_bit(i), 1);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// Determinism rules "forcer set present => forced vertex joins": f(S) equals
// f(cl(S)) for every f in the Shannon cone satisfying the determinism
// equalities, because the marginal of the forced vertex is squeezed between
// monotonicity and the submodular chain down to its in-neighborhood.
// Substituting cl(S) for S therefore yields an equivalent LP on far fewer
// distinct variables.
std::vector<std::uint32_t> closure_table(int ground,
                                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& rules) {
    const std::uint32_t total = std::uint32_t(1) << ground;
    std::vector<std::uint32_t> cl(total);
    for (std::uint32_t s = 0; s < total; ++s) {
        std::uint32_t cur = s;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [forcer, forced] : rules)
                if ((cur & forcer) == forcer && (cur | forced) != cur) {
                    cur |= forced;
                    changed = true;
                }
        }
        cl[s] = cur;
    }
    return cl;
}

void apply_closure(std::vector<LinearConstraint>& rows, const std::vector<std::uint32_t>& cl) {
    for (auto& c : rows)
        for (auto& [subset, coeff] : c.terms) subset = cl[subset];
}

std::vector<LinearConstraint> extra_inequalities(const IneqSelector& sel, int ground) {
    switch (sel.kind) {
        case IneqSelector::Kind::Shannon: return {};
        case IneqSelector::Kind::ZY: return zy_instances(ground, sel.policy);
        case IneqSelector::Kind::Custom: return instantiate(sel.custom, ground);
    }
    return {};
}

// Rows deduplicated by normalized form; keeps LPs small when instantiation
// emits symmetric duplicates. Result duals are mapped back onto the original
// constraint list (duplicates get zero).
struct RowKey {
    SparseForm terms;
    Relation rel;
    Rational rhs;
    bool operator<(const RowKey& o) const {
        if (rel != o.rel) return rel < o.rel;
        if (rhs != o.rhs) return rhs < o.rhs;
        if (terms.size() != o.terms.size()) return terms.size() < o.terms.size();
        for (size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].first != o.terms[i].first) return terms[i].first < o.terms[i].first;
            if (terms[i].second != o.terms[i].second) return terms[i].second < o.terms[i].second;
        }
        return false;
    }
};

bool trivially_satisfied(const LinearConstraint& c) {
    if (!c.terms.empty()) return false;
    switch (c.rel) {
        case Relation::LessEq: return c.rhs >= 0;
        case Relation::GreaterEq: return c.rhs <= 0;
        case Relation::Equal: return c.rhs == 0;
    }
    return false;
}

BoundResult solve_bound(LinearProgram lp, std::vector<LinearConstraint> rows,
                        const std::vector<std::uint32_t>& cl) {
    apply_closure(rows, cl);
    for (auto& [subset, coeff] : lp.objective) subset = cl[subset];

    std::map<RowKey, size_t> seen;
    for (auto& c : rows) c.normalize();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (trivially_satisfied(rows[i])) continue;
        RowKey key{rows[i].terms, rows[i].rel, rows[i].rhs};
        auto [it, inserted] = seen.emplace(std::move(key), lp.constraints.size());
        if (inserted) lp.constraints.push_back(rows[i]);
    }

    LPResult res = lp.constraints.size() > 24 ? solve_lp_via_dual(lp) : solve_lp(lp);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("entropy-like LP must be feasible and bounded");

    // Expand the primal back onto all subsets via the closure map.
    SetFunction expanded(lp.ground);
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << lp.ground); ++s)
        expanded[s] = res.primal(cl[s]);
    res.primal = std::move(expanded);

    BoundResult out;
    out.value = res.value;
    out.lp = std::move(lp);
    out.result = std::move(res);
    return out;
}

}  // namespace

BoundResult entropy_bound_result(const DirectedGraph& g, const IneqSelector& sel) {
    if (g.n() > 13) throw BudgetError("entropy bound supports n <= 13 (2^n LP variables)");
    LinearProgram lp;
    lp.ground = g.n();
    lp.sense = Sense::Maximize;
    lp.objective = {{g.full_set(), Rational(1)}};
    std::vector<LinearConstraint> rows = elemental_shannon_inequalities(g.n());
    for (auto& c : extra_inequalities(sel, g.n())) rows.push_back(std::move(c));
    for (auto& c : graph_constraints(g)) rows.push_back(std::move(c));

    std::vector<std::pair<std::uint32_t, std::uint32_t>> rules;
    for (int j = 0; j < g.n(); ++j) rules.emplace_back(g.in_mask(j), vertex_bit(j));
    return solve_bound(std::move(lp), std::move(rows), closure_table(g.n(), rules));
}

Rational entropy_bound(const DirectedGraph& g, const IneqSelector& sel) {
    return entropy_bound_result(g, sel).value;
}

BoundResult index_code_bound_result(const DirectedGraph& g, const IneqSelector& sel) {
    const int ground = g.n() + 1;
    if (ground > 13) throw BudgetError("index-code bound supports n + 1 <= 13");
    const int w = g.n();
    const std::uint32_t wbit = vertex_bit(w);
    const std::uint32_t v_all = g.full_set();

    LinearProgram lp;
    lp.ground = ground;
    lp.sense = Sense::Minimize;
    lp.objective = {{wbit, Rational(1)}};

    std::vector<LinearConstraint> rows = elemental_shannon_inequalities(ground);
    for (auto& c : extra_inequalities(sel, ground)) rows.push_back(std::move(c));
    // vertex determinism given in-neighbors plus the broadcast w
    for (int j = 0; j < g.n(); ++j) {
        LinearConstraint c;
        c.rel = Relation::Equal;
        c.add(vertex_bit(j) | g.in_mask(j) | wbit, 1);
        c.add(g.in_mask(j) | wbit, -1);
        c.normalize();
        rows.push_back(std::move(c));
    }
    // w is a function of the node values
    {
        LinearConstraint c;
        c.rel = Relation::Equal;
        c.add(v_all | wbit, 1);
        c.add(v_all, -1);
        rows.push_back(std::move(c));
    }
    // full independence: f(V) = n with unit singleton caps
    {
        LinearConstraint c;
        c.rel = Relation::Equal;
        c.rhs = g.n();
        c.add(v_all, 1);
        rows.push_back(std::move(c));
    }
    for (int i = 0; i < g.n(); ++i) {
        LinearConstraint c;
        c.rel = Relation::LessEq;
        c.rhs = 1;
        c.add(vertex_bit(i), 1);
        rows.push_back(std::move(c));
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> rules;
    for (int j = 0; j < g.n(); ++j) rules.emplace_back(g.in_mask(j) | wbit, vertex_bit(j));
    rules.emplace_back(v_all, wbit);
    return solve_bound(std::move(lp), std::move(rows), closure_table(ground, rules));
}

Rational index_code_bound(const DirectedGraph& g, const IneqSelector& sel) {
    return index_code_bound_result(g, sel).value;
}

}  // namespace gent

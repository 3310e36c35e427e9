#pragma once

#include <gent/graph.hpp>
#include <gent/inequalities.hpp>
#include <gent/lp.hpp>

namespace gent {

// Which inequality family bounds the entropy-like functions.
struct IneqSelector {
    enum class Kind { Shannon, ZY, Custom };
    Kind kind = Kind::Shannon;
    ZYPolicy policy = ZYPolicy::Singletons;
    InequalitySet custom;

    static IneqSelector shannon() { return {}; }
    static IneqSelector zy(ZYPolicy p = ZYPolicy::Singletons) {
        IneqSelector s;
        s.kind = Kind::ZY;
        s.policy = p;
        return s;
    }
    static IneqSelector custom_set(InequalitySet set) {
        IneqSelector s;
        s.kind = Kind::Custom;
        s.custom = std::move(set);
        return s;
    }
};

// Per-vertex determinism equalities f({j} u N-(j)) = f(N-(j)) followed by the
// normalization caps f({i}) <= 1. A self-loop vertex yields a vacuous
// equality (kept, with empty term list).
std::vector<LinearConstraint> graph_constraints(const DirectedGraph& g);

struct BoundResult {
    Rational value;
    LinearProgram lp;
    LPResult result;
};

// E_S(G) / instantiated E_ZY(G) / E_custom(G): maximize f(V) over the chosen
// entropy-like cone intersected with the graph's determinism constraints.
// Exact rational optimum; n <= 13.
BoundResult entropy_bound_result(const DirectedGraph& g, const IneqSelector& sel);
Rational entropy_bound(const DirectedGraph& g, const IneqSelector& sel);

// i_S(G) / instantiated i_ZY(G) / i_custom(G): ground set V u {w}; minimize
// f({w}) subject to vertex constraints with w adjoined, determinism of w, and
// the full-independence normalization f(V) = n with unit singleton caps.
// n + 1 <= 13.
BoundResult index_code_bound_result(const DirectedGraph& g, const IneqSelector& sel);
Rational index_code_bound(const DirectedGraph& g, const IneqSelector& sel);

}  // namespace gent

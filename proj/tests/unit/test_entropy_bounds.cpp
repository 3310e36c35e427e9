#include <doctest.h>

#include <random>

#include <gent/entropy_bounds.hpp>
#include <gent/errors.hpp>

using namespace gent;

namespace {

DirectedGraph random_dag(std::mt19937& rng, int n, double p) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(order[i], order[j]);
    return DirectedGraph(n, std::move(edges));
}

}  // namespace

TEST_SUITE_BEGIN("entropy_bounds");

TEST_CASE("graph constraints") {
    // in-degree 0 vertex pins f({j}) = 0
    auto g = DirectedGraph(2, {{0, 1}});
    auto cs = graph_constraints(g);
    REQUIRE(cs.size() == 4);  // 2 equalities + 2 caps
    CHECK(cs[0].terms == SparseForm{{1u, Rational(1)}});
    CHECK(cs[0].rel == Relation::Equal);
    // self-loop-only vertex: vacuous equality, only the cap binds
    auto loop = DirectedGraph(1, {{0, 0}});
    auto cs2 = graph_constraints(loop);
    REQUIRE(cs2.size() == 2);
    CHECK(cs2[0].terms.empty());
    CHECK(cs2[1].rel == Relation::LessEq);
    // directed C3: three equalities f({j, j-1}) = f({j-1})
    auto c3 = directed_cycle(3);
    auto cs3 = graph_constraints(c3);
    CHECK(cs3[1].terms == SparseForm{{1u, Rational(-1)}, {3u, Rational(1)}});
}

TEST_CASE("pentagon shannon entropy is 5/2") {
    auto r = entropy_bound(bidirected_cycle(5), IneqSelector::shannon());
    CHECK(r == Rational(5, 2));
}

TEST_CASE("pentagon zy entropy is 5/2") {
    auto r = entropy_bound(bidirected_cycle(5), IneqSelector::zy());
    CHECK(r == Rational(5, 2));
}

TEST_CASE("complete graphs have entropy n-1") {
    for (int n = 3; n <= 5; ++n)
        CHECK(entropy_bound(bidirected_complete(n), IneqSelector::shannon()) == Rational(n - 1));
}

TEST_CASE("directed cycles have entropy 1") {
    for (int n = 3; n <= 6; ++n)
        CHECK(entropy_bound(directed_cycle(n), IneqSelector::shannon()) == Rational(1));
}

TEST_CASE("bidirected cycles have entropy k/2") {
    for (int k : {4, 6, 7})
        CHECK(entropy_bound(bidirected_cycle(k), IneqSelector::shannon()) == make_rational(k, 2));
}

TEST_CASE("acyclic graphs have entropy 0") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_dag(rng, 3 + int(rng() % 5), 0.4);
        CHECK(entropy_bound(g, IneqSelector::shannon()) == 0);
    }
}

TEST_CASE("entropy bound is capped by n minus the acyclic independence number") {
    std::mt19937 rng(78);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + int(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        DirectedGraph g(n, std::move(edges));
        auto es = entropy_bound(g, IneqSelector::shannon());
        auto ezy = entropy_bound(g, IneqSelector::zy());
        CHECK(ezy <= es);
        CHECK(es <= Rational(g.n() - max_induced_acyclic(g).size));
    }
}

TEST_CASE("pentagon index-code bound is 5/2") {
    CHECK(index_code_bound(bidirected_cycle(5), IneqSelector::shannon()) == Rational(5, 2));
}

TEST_CASE("all-self-loops graph has index-code bound 0") {
    auto g = DirectedGraph(3, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(index_code_bound(g, IneqSelector::shannon()) == 0);
}

TEST_CASE("directed C3 index-code bound is 2") {
    CHECK(index_code_bound(directed_cycle(3), IneqSelector::shannon()) == 2);
}

TEST_CASE("custom file equal to zy gives the zy bound") {
    const std::string text =
        "groups: singletons\n"
        "3*f(C|D) + 3*f(A|C) + 3*f(A|D) + 1*f(B|C) + 1*f(B|D) - 2*f(C) - 2*f(D)"
        " - 1*f(A) - 1*f(A|B) - 4*f(A|C|D) - 1*f(B|C|D) >= 0\n";
    auto sel = IneqSelector::custom_set(load_inequality_set(text));
    auto g = bidirected_cycle(5);
    CHECK(entropy_bound(g, sel) == entropy_bound(g, IneqSelector::zy()));
}

TEST_CASE("budget caps") {
    std::vector<std::pair<int, int>> edges;
    DirectedGraph g14(14, {});
    CHECK_THROWS_AS((void)entropy_bound(g14, IneqSelector::shannon()), BudgetError);
    DirectedGraph g13(13, {});
    CHECK_THROWS_AS((void)index_code_bound(g13, IneqSelector::shannon()), BudgetError);
}

TEST_CASE("expanded primal satisfies the full unreduced constraint families") {
    // The solver shrinks the LP by identifying subsets with equal value under
    // the determinism closure; the reported set function must still satisfy
    // every raw elemental, ZY, and graph constraint.
    std::mt19937 rng(421);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 + int(rng() % 3);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        DirectedGraph g(n, std::move(edges));
        auto br = entropy_bound_result(g, IneqSelector::zy());
        const SetFunction& f = br.result.primal;
        auto check_all = [&](const std::vector<LinearConstraint>& cs) {
            for (const auto& c : cs) {
                Rational lhs = evaluate(c.terms, f);
                switch (c.rel) {
                    case Relation::LessEq: CHECK(lhs <= c.rhs); break;
                    case Relation::GreaterEq: CHECK(lhs >= c.rhs); break;
                    case Relation::Equal: CHECK(lhs == c.rhs); break;
                }
            }
        };
        check_all(elemental_shannon_inequalities(n));
        check_all(zy_instances(n));
        check_all(graph_constraints(g));
        CHECK(f(g.full_set()) == br.value);
    }
}

TEST_CASE("primal certificate satisfies every constraint exactly") {
    auto br = entropy_bound_result(bidirected_cycle(5), IneqSelector::shannon());
    CHECK(br.result.verified);
    for (size_t i = 0; i < br.lp.constraints.size(); ++i) {
        const auto& c = br.lp.constraints[i];
        Rational lhs = evaluate(c.terms, br.result.primal);
        switch (c.rel) {
            case Relation::LessEq: CHECK(lhs <= c.rhs); break;
            case Relation::GreaterEq: CHECK(lhs >= c.rhs); break;
            case Relation::Equal: CHECK(lhs == c.rhs); break;
        }
    }
    // duality: dual objective equals primal objective
    Rational dual_obj = 0;
    for (size_t i = 0; i < br.lp.constraints.size(); ++i)
        dual_obj += br.result.duals[i] * br.lp.constraints[i].rhs;
    CHECK(dual_obj == br.value);
}

TEST_SUITE_END();

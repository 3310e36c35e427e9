#include <doctest.h>

#include <bit>
#include <random>

#include <gent/errors.hpp>
#include <gent/graph.hpp>

using namespace gent;

namespace {

// Independent acyclicity oracle: try to build a topological order.
bool has_topological_order(const DirectedGraph& g, VertexSet sub) {
    std::vector<int> indeg(g.n(), 0);
    for (auto [u, v] : g.edges())
        if ((sub & vertex_bit(u)) && (sub & vertex_bit(v))) {
            if (u == v) return false;
            ++indeg[v];
        }
    VertexSet remaining = sub;
    while (remaining) {
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
            if ((remaining & vertex_bit(v)) && indeg[v] == 0) {
                pick = v;
                break;
            }
        if (pick < 0) return false;
        remaining &= ~vertex_bit(pick);
        for (int w : g.out_neighbors(pick))
            if (remaining & vertex_bit(w)) --indeg[w];
    }
    return true;
}

DirectedGraph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return DirectedGraph(n, std::move(edges));
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("parse single edge") {
    auto g = parse_graph("nodes 2\n0 -> 1\n");
    CHECK(g.n() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("parse bidirected pentagon") {
    auto g = parse_graph(
        "nodes 5\n0 <-> 1\n1 <-> 2\n2 <-> 3\n3 <-> 4\n4 <-> 0\n");
    CHECK(g.n() == 5);
    CHECK(g.edges().size() == 10);
    CHECK(g == bidirected_cycle(5));
    CHECK(g.in_neighbors(0) == std::vector<int>{1, 4});
}

TEST_CASE("parse self-loop and comments") {
    auto g = parse_graph("# a loop\nnodes 1\n0 -> 0\n");
    CHECK(g.n() == 1);
    CHECK(g.has_edge(0, 0));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS((void)parse_graph("nodes 2\n0 -> 5\n"),
                         "line 2: vertex index out of range", ParseError);
    CHECK_THROWS_AS((void)parse_graph("nodes 2\n0 -> 1\n0 -> 1\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("nodes 2\n0 <-> 1\n1 -> 0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("nodes 2\n0 -> 1 extra\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("nodes 2\n0  ->  1\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("nodes 0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("0 -> 1\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph(""), ParseError);
    // bidirected self-loop would store (0,0) twice
    CHECK_THROWS_AS((void)parse_graph("nodes 1\n0 <-> 0\n"), ParseError);
}

TEST_CASE("graph text round trip") {
    auto g = bidirected_cycle(5);
    CHECK(parse_graph(to_text(g)) == g);
}

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(DirectedGraph(3, {})));
    CHECK_FALSE(is_acyclic(directed_cycle(3)));
    CHECK_FALSE(is_acyclic(DirectedGraph(1, {{0, 0}})));
    CHECK(is_acyclic(DirectedGraph(3, {{0, 1}, {0, 2}, {1, 2}})));
}

TEST_CASE("acyclicity agrees with topological-order oracle") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + int(rng() % 8);
        auto g = random_graph(rng, n, 0.3);
        CHECK(is_acyclic(g) == has_topological_order(g, g.full_set()));
    }
}

TEST_CASE("reverse") {
    CHECK(reverse(DirectedGraph(2, {{0, 1}})) == DirectedGraph(2, {{1, 0}}));
    CHECK(reverse(bidirected_cycle(5)) == bidirected_cycle(5));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 2 + int(rng() % 6), 0.4);
        CHECK(reverse(reverse(g)) == g);
    }
}

TEST_CASE("shift") {
    auto g = DirectedGraph(3, {{0, 1}});
    CHECK(shift(g, 0) == g);
    CHECK(shift(g, 1) == DirectedGraph(3, {{0, 2}}));
    CHECK_THROWS(shift(g, 3));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + int(rng() % 6);
        auto h = random_graph(rng, n, 0.4);
        int t = int(rng() % n);
        CHECK(shift(h, t).edges().size() == h.edges().size());
        CHECK(shift(shift(h, t), (n - t) % n) == h);
    }
}

TEST_CASE("max induced acyclic") {
    auto dag = DirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto r = max_induced_acyclic(dag);
    CHECK(r.size == 4);
    CHECK(r.witness == dag.full_set());

    // Pentagon: brute-force oracle over all 32 subsets says 2.
    auto c5 = bidirected_cycle(5);
    int brute = 0;
    for (VertexSet s = 0; s < 32; ++s)
        if (has_topological_order(c5, s)) brute = std::max(brute, std::popcount(s));
    CHECK(brute == 2);
    auto rc5 = max_induced_acyclic(c5);
    CHECK(rc5.size == 2);
    CHECK(is_acyclic_induced(c5, rc5.witness));

    CHECK(max_induced_acyclic(bidirected_complete(4)).size == 1);
}

TEST_CASE("minimal split") {
    CHECK(minimal_split(DirectedGraph(3, {{0, 1}})) == 0);
    auto b = minimal_split(bidirected_complete(3));
    CHECK(std::popcount(b) == 2);
    auto c = minimal_split(directed_cycle(5));
    CHECK(std::popcount(c) == 1);
    // split size + acyclic independence number = n
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 2 + int(rng() % 6), 0.5);
        CHECK(std::popcount(minimal_split(g)) + max_induced_acyclic(g).size == g.n());
    }
}

TEST_CASE("tournament census") {
    CHECK(enumerate_tournaments(2).size() == 1);
    CHECK(enumerate_tournaments(3).size() == 2);
    CHECK(enumerate_tournaments(4).size() == 4);
    CHECK(enumerate_tournaments(5).size() == 12);
    CHECK(enumerate_tournaments(6).size() == 56);
    CHECK_THROWS(enumerate_tournaments(1));
    CHECK_THROWS(enumerate_tournaments(7));
}

TEST_CASE("tournaments are pairwise non-isomorphic with n(n-1)/2 edges") {
    for (int n = 2; n <= 5; ++n) {
        auto ts = enumerate_tournaments(n);
        for (size_t i = 0; i < ts.size(); ++i) {
            CHECK(int(ts[i].edges().size()) == n * (n - 1) / 2);
            for (size_t j = i + 1; j < ts.size(); ++j)
                CHECK_FALSE(isomorphic(ts[i], ts[j]));
        }
    }
}

TEST_SUITE_END();

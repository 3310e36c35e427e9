#include <doctest.h>

#include <random>

#include <gent/code_search.hpp>
#include <gent/entropy_bounds.hpp>
#include <gent/errors.hpp>

using namespace gent;

namespace {

Code code_of_strings(int n, int s, const std::vector<std::string>& words) {
    Code code;
    code.n = n;
    code.s = s;
    for (const auto& t : words) code.words.push_back(word_from_string(t, s));
    std::sort(code.words.begin(), code.words.end());
    return code;
}

// brute-force maximum conflict-free subset by subset enumeration (oracle)
std::size_t brute_force_max_code(const DirectedGraph& g, int s) {
    std::size_t total = word_space_size(g.n(), s);
    REQUIRE(total <= 20);
    std::vector<Word> words;
    for (std::size_t i = 0; i < total; ++i) words.push_back(word_from_index(i, g.n(), s));
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < total && ok; ++i)
            for (std::size_t j = i + 1; j < total && ok; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && conflicts(g, s, words[i], words[j]))
                    ok = false;
        if (ok) best = std::max(best, std::size_t(std::popcount(mask)));
    }
    return best;
}

const std::vector<std::string> kPentagonWords = {"00101", "10010", "01001", "10100", "01010"};

}  // namespace

TEST_SUITE_BEGIN("code_search");

TEST_CASE("conflicts definition") {
    auto two_cycle = DirectedGraph(2, {{0, 1}, {1, 0}});
    Word u = word_from_string("00", 2), v11 = word_from_string("11", 2),
         v01 = word_from_string("01", 2);
    CHECK_FALSE(conflicts(two_cycle, 2, u, u));
    CHECK_FALSE(conflicts(two_cycle, 2, u, v11));
    CHECK(conflicts(two_cycle, 2, u, v01));
}

TEST_CASE("confusion graph shapes") {
    // all in-degrees 0: every pair of distinct words conflicts
    auto edgeless = DirectedGraph(2, {});
    auto cg = build_confusion_graph(edgeless, 2);
    CHECK(cg.graph.edge_count() == 4 * 3 / 2);
    // all self-loops: no conflicts at all
    auto loops = DirectedGraph(2, {{0, 0}, {1, 1}});
    CHECK(build_confusion_graph(loops, 2).graph.edge_count() == 0);
    // pentagon at s=2: 32 words, independence number 5
    auto c5 = build_confusion_graph(bidirected_cycle(5), 2);
    CHECK(c5.graph.size() == 32);
    CHECK(max_independent_set(c5.graph).size() == 5);
}

TEST_CASE("max code on small graphs against brute force") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + int(rng() % 2);  // 2^(s^n) enumerable
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        DirectedGraph g(n, std::move(edges));
        int s = 2 + int(rng() % 2);
        if (word_space_size(n, s) > 16) continue;
        CHECK(max_graph_code(g, s).size() == brute_force_max_code(g, s));
    }
}

TEST_CASE("directed C3 has a 2-word maximum code") {
    auto code = max_graph_code(directed_cycle(3), 2);
    CHECK(code.size() == 2);
    CHECK(validate_code(directed_cycle(3), code));
}

TEST_CASE("pentagon code from the worked example") {
    auto c5 = bidirected_cycle(5);
    auto listed = code_of_strings(5, 2, kPentagonWords);
    CHECK(validate_code(c5, listed));
    auto code = max_graph_code(c5, 2);
    CHECK(code.size() == 5);
    CHECK(validate_code(c5, code));
}

TEST_CASE("complete-graph zero-mod-s code") {
    auto k3 = bidirected_complete(3);
    auto code = max_graph_code(k3, 2);
    CHECK(code.size() == 4);
    auto constructed = mod_sum_complete_code(k3, 2);
    REQUIRE(constructed.has_value());
    CHECK(constructed->size() == 4);
    CHECK(validate_code(k3, *constructed));
}

TEST_CASE("guessing numbers") {
    for (int n = 2; n <= 4; ++n) {
        auto g = guessing_number(bidirected_complete(n), 2);
        CHECK(g.value == LogValue(integer_pow(Integer(2), n - 1), 2));
        CHECK(g.value.is_integer());
        CHECK(g.value.integer_value() == n - 1);
    }
    CHECK(guessing_number(bidirected_cycle(5), 2).value == LogValue(5ul, 2));
}

TEST_CASE("pentagon square-alphabet sandwich closes at 5/2") {
    auto c5 = bidirected_cycle(5);
    auto lr = lr_pair_cycle_code(c5, 4);
    REQUIRE(lr.has_value());
    CHECK(lr->size() == 32);
    CHECK(validate_code(c5, *lr));
    auto res = guessing_number(c5, 4, GuessMode::Sandwich);
    CHECK(res.exact);
    CHECK(res.value == LogValue(32ul, 4));
    CHECK(*res.upper == Rational(5, 2));
    CHECK(compare(res.value, Rational(5, 2)) == 0);
}

TEST_CASE("sandwich does not close for pentagon at s=2") {
    auto res = guessing_number(bidirected_cycle(5), 2, GuessMode::Sandwich);
    CHECK_FALSE(res.exact);  // log2 m < 5/2 for any integer m
    CHECK(*res.upper == Rational(5, 2));
    CHECK(compare(res.value, *res.upper) < 0);
}

TEST_CASE("strategy from code and fixpoints") {
    auto c3 = directed_cycle(3);
    auto code = code_of_strings(3, 2, {"000", "111"});
    REQUIRE(validate_code(c3, code));
    auto strat = strategy_from_code(c3, code);
    // each vertex repeats its single predecessor's value
    for (int j = 0; j < 3; ++j) CHECK(strat.tables[j] == std::vector<std::uint8_t>{0, 1});
    auto fp = fixpoint_count(c3, strat, 2);
    CHECK(fp.count >= 2);

    // constant-0 strategy fixes only 000
    GuessingStrategy zero{3, 2, {{0, 0}, {0, 0}, {0, 0}}};
    CHECK(fixpoint_count(c3, zero, 2) == LogValue(1ul, 2));

    // an in-degree-0 vertex whose codewords share a letter becomes a constant
    auto chain = DirectedGraph(2, {{0, 1}});
    auto shared = strategy_from_code(chain, code_of_strings(2, 2, {"10"}));
    CHECK(shared.tables[0] == std::vector<std::uint8_t>{1});

    // 0-mod-2 strategy on K3 fixes exactly the even-weight words
    auto k3 = bidirected_complete(3);
    auto mod = strategy_from_code(k3, *mod_sum_complete_code(k3, 2));
    CHECK(fixpoint_count(k3, mod, 2) == LogValue(4ul, 2));

    // pentagon listed code: at least 5 fixpoints out of 32
    auto c5 = bidirected_cycle(5);
    auto pent = strategy_from_code(c5, code_of_strings(5, 2, kPentagonWords));
    CHECK(fixpoint_count(c5, pent, 2).count >= 5);
}

TEST_CASE("fixpoint count never beats the maximum code") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 2);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        DirectedGraph g(n, std::move(edges));
        GuessingStrategy strat;
        strat.n = n;
        strat.s = 2;
        strat.tables.resize(n);
        for (int j = 0; j < n; ++j) {
            std::size_t size = std::size_t(1) << g.in_neighbors(j).size();
            for (std::size_t t = 0; t < size; ++t)
                strat.tables[j].push_back(std::uint8_t(rng() % 2));
        }
        CHECK(fixpoint_count(g, strat, 2).count <= Integer(static_cast<unsigned long>(max_graph_code(g, 2).size())));
    }
}

TEST_CASE("validate code rejects conflicting pairs") {
    auto two_cycle = DirectedGraph(2, {{0, 1}, {1, 0}});
    CHECK(validate_code(two_cycle, code_of_strings(2, 2, {"01"})));
    CHECK_FALSE(validate_code(two_cycle, code_of_strings(2, 2, {"00", "01"})));
}

TEST_CASE("edge monotonicity of max code") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + int(rng() % 2);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        DirectedGraph g(n, edges);
        // add a missing edge if any
        std::vector<std::pair<int, int>> missing;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (!g.has_edge(u, v)) missing.emplace_back(u, v);
        if (missing.empty()) continue;
        auto extra = missing[rng() % missing.size()];
        edges.push_back(extra);
        DirectedGraph g2(n, edges);
        CHECK(max_graph_code(g2, 2).size() >= max_graph_code(g, 2).size());
    }
}

TEST_CASE("min index code basics") {
    // all self-loops: edgeless confusion graph, one message
    auto loops = DirectedGraph(2, {{0, 0}, {1, 1}});
    auto res = min_index_code(loops, 2);
    CHECK(res.coloring.num_colors == 1);
    CHECK(compare(res.length, Rational(0)) == 0);
    // the all-self-loops public guessing number is n itself
    auto pub_loops = public_guessing_number(loops, 2);
    CHECK(pub_loops.index_count == LogValue(1ul, 2));
    CHECK(compare_with_public(LogValue(4ul, 2), pub_loops) == 0);  // log2(4) = 2 = n - 0
    // edgeless graph: complete confusion graph, s^n messages
    auto edgeless = DirectedGraph(2, {});
    CHECK(min_index_code(edgeless, 2).coloring.num_colors == 4);
    // directed C3: chromatic number 4 at s=2, i(G,2) = 2
    auto c3 = min_index_code(directed_cycle(3), 2);
    CHECK(c3.coloring.num_colors == 4);
    CHECK(compare(c3.length, Rational(2)) == 0);
}

TEST_CASE("every color class is a valid code") {
    for (const DirectedGraph& g :
         {directed_cycle(3), bidirected_complete(3), DirectedGraph(2, {{0, 1}})}) {
        auto res = min_index_code(g, 2);
        for (int c = 0; c < res.coloring.num_colors; ++c) {
            Code cls;
            cls.n = g.n();
            cls.s = 2;
            for (std::size_t idx = 0; idx < res.coloring.color.size(); ++idx)
                if (res.coloring.color[idx] == c)
                    cls.words.push_back(word_from_index(idx, g.n(), 2));
            CHECK(validate_code(g, cls));
        }
    }
}

namespace {

// plain backtracking k-colorability, independent of the DSATUR search
bool kcolorable(const BitGraph& g, int k, const std::vector<int>& order, std::size_t pos,
                std::vector<int>& color, int used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int cap = std::min(k, used + 1);
    for (int c = 0; c < cap; ++c) {
        bool ok = true;
        for (int u : order)
            if (color[u] == c && g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (kcolorable(g, k, order, pos + 1, color, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

bool kcolorable(const BitGraph& g, int k) {
    std::vector<int> order(g.size()), deg(g.size(), 0), color(g.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        order[v] = v;
        for (int u = 0; u < g.size(); ++u)
            if (u != v && g.adjacent(u, v)) ++deg[v];
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    return kcolorable(g, k, order, 0, color, 0);
}

}  // namespace

TEST_CASE("pentagon confusion graph has chromatic number exactly 8") {
    // frozen from the independent backtracking oracle: not 7-colorable,
    // 8-colorable; hence the public guessing number of C5 at s=2 is exactly
    // 5 - log2(8) = 2, the second of the two candidate values
    auto cg = build_confusion_graph(bidirected_cycle(5), 2);
    CHECK_FALSE(kcolorable(cg.graph, 7));
    CHECK(kcolorable(cg.graph, 8));
    auto res = min_index_code(bidirected_cycle(5), 2);
    CHECK(res.coloring.num_colors == 8);
    auto pub = public_guessing_number(bidirected_cycle(5), 2);
    // 5 - log2(8) = 2 = log2(4)
    CHECK(compare_with_public(LogValue(4ul, 2), pub) == 0);
}

TEST_CASE("exact chromatic search matches plain backtracking on random graphs") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + int(rng() % 8);
        BitGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        std::vector<int> coloring;
        int chi = exact_chromatic_number(g, coloring);
        CHECK(kcolorable(g, chi));
        if (chi > 1) CHECK_FALSE(kcolorable(g, chi - 1));
    }
}

TEST_CASE("pentagon public guessing number is separated from the private one") {
    auto c5 = bidirected_cycle(5);
    auto pub = public_guessing_number(c5, 2);
    // chromatic number of the 32-word confusion graph is at least 7
    CHECK(pub.index_count.count >= 7);
    // n - log2(m) <= 5 - log2(7) < log2 5 = g(C5, 2)
    auto g = guessing_number(c5, 2).value;
    CHECK(compare_with_public(g, pub) > 0);
}

TEST_CASE("k3 public guessing number is 2") {
    auto pub = public_guessing_number(bidirected_complete(3), 2);
    CHECK(pub.index_count == LogValue(2ul, 2));  // broadcast the sum mod 2
    // value = 3 - log2 2 = 2
    CHECK(compare_with_public(LogValue(4ul, 2), pub) == 0);
}

TEST_CASE("pair-sum coloring on the pentagon at s=4") {
    auto c5 = bidirected_cycle(5);
    auto col = pair_sum_cycle_coloring(c5, 4);
    REQUIRE(col.has_value());
    CHECK(col->num_colors == 32);
    // every class decodes: classes are valid codes
    for (int c = 0; c < 4; ++c) {  // spot-check a few classes
        Code cls;
        cls.n = 5;
        cls.s = 4;
        for (std::size_t idx = 0; idx < col->color.size(); ++idx)
            if (col->color[idx] == c) cls.words.push_back(word_from_index(idx, 5, 4));
        CHECK(cls.words.size() == 32);
        CHECK(validate_code(c5, cls));
    }
}

TEST_CASE("code entropy") {
    auto pent = code_of_strings(5, 2, kPentagonWords);
    CHECK(code_entropy(pent, 0) == LogValue(1ul, 2));  // empty set -> 0
    CHECK(code_entropy(pent, 0b11111) == LogValue(5ul, 2));
    // full word space projects onto |S| coordinates
    Code full;
    full.n = 3;
    full.s = 2;
    for (std::size_t i = 0; i < 8; ++i) full.words.push_back(word_from_index(i, 3, 2));
    CHECK(code_entropy(full, 0b101) == LogValue(4ul, 2));
    CHECK(code_entropy(full, 0b111) == LogValue(8ul, 2));
}

TEST_CASE("max code times chromatic number covers the word space") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + int(rng() % 2);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        DirectedGraph g(n, std::move(edges));
        auto alpha = max_graph_code(g, 2).size();
        auto chi = min_index_code(g, 2).coloring.num_colors;
        CHECK(Integer(static_cast<unsigned long>(alpha)) * Integer(chi) >=
              integer_pow(Integer(2), static_cast<unsigned long>(n)));
    }
}

TEST_CASE("private equals public at prime s forces an integer value") {
    // scan all loopy digraphs with n <= 3 at s = 2 and n <= 2 at s = 3
    auto scan = [&](int n, int s) {
        const std::uint64_t total = std::uint64_t(1) << (n * n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (mask & (std::uint64_t(1) << (u * n + v))) edges.emplace_back(u, v);
            DirectedGraph g(n, std::move(edges));
            auto gv = guessing_number(g, s).value;
            auto pub = public_guessing_number(g, s);
            if (compare_with_public(gv, pub) == 0) {
                CHECK(gv.is_integer());
                CHECK(pub.index_count.is_integer());
            }
        }
    };
    scan(1, 2);
    scan(2, 2);
    scan(3, 2);
    scan(1, 3);
    scan(2, 3);
}

TEST_CASE("budget errors") {
    auto big = DirectedGraph(21, {});
    CHECK_THROWS_AS((void)build_confusion_graph(big, 2), BudgetError);       // 2^21 words
    CHECK_THROWS_AS((void)max_graph_code(DirectedGraph(16, {}), 2), BudgetError);  // 2^16 matrix
    CHECK(max_graph_code(DirectedGraph(16, {}), 2, SearchMode::LowerBoundOnly).size() == 1);
}

TEST_SUITE_END();

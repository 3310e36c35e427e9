#include <gent/network.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <gent/errors.hpp>

namespace gent {

namespace detail {
DirectedGraph parse_graph_lines(const std::string& text, bool allow_pairs,
                                std::vector<std::pair<int, int>>* pairs,
                                std::vector<int>* pair_lines);
}

namespace {

// Returns the index of the offending pair, or -1 when fine; *message names
// the problem.
int find_pair_violation(const DirectedGraph& g, const std::vector<std::pair<int, int>>& pairs,
                        std::string* message) {
    std::vector<int> endpoint_owner(g.n(), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [s, t] = pairs[i];
        if (!g.in_neighbors(s).empty()) {
            *message = "network source has an incoming edge";
            return int(i);
        }
        for (int v : {s, t}) {
            if (endpoint_owner[v] >= 0 || (v == s && v == t)) {
                *message = "duplicate pair endpoint";
                return int(i);
            }
            endpoint_owner[v] = int(i);
        }
    }
    return -1;
}

}  // namespace

Network make_network(DirectedGraph g, std::vector<std::pair<int, int>> pairs) {
    if (!is_acyclic(g)) throw std::invalid_argument("network graph must be acyclic");
    std::string message;
    if (find_pair_violation(g, pairs, &message) >= 0) throw std::invalid_argument(message);
    Network net;
    net.graph = std::move(g);
    net.pairs = std::move(pairs);
    return net;
}

Network parse_network(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pair_lines;
    DirectedGraph g = detail::parse_graph_lines(text, true, &pairs, &pair_lines);
    if (!is_acyclic(g)) throw ParseError(1, "network graph must be acyclic");
    std::string message;
    int bad = find_pair_violation(g, pairs, &message);
    if (bad >= 0) throw ParseError(pair_lines[bad], message);
    Network net;
    net.graph = std::move(g);
    net.pairs = std::move(pairs);
    return net;
}

std::string to_text(const Network& net) {
    std::ostringstream out;
    out << to_text(net.graph);
    for (auto [s, t] : net.pairs) out << "pair " << s << " " << t << "\n";
    return out.str();
}

Network split_graph(const DirectedGraph& g, VertexSet b) {
    if (!is_acyclic_induced(g, g.full_set() & ~b))
        throw std::invalid_argument("B is not a split: V \\ B induces a cycle");
    const int n = g.n();
    std::vector<int> members = set_members(b);
    std::vector<int> target_of(n, -1);
    for (std::size_t i = 0; i < members.size(); ++i) target_of[members[i]] = n + int(i);

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int head = target_of[v] >= 0 ? target_of[v] : v;  // heads move to the copy
        edges.emplace_back(u, head);
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < members.size(); ++i)
        pairs.emplace_back(members[i], n + int(i));
    return make_network(DirectedGraph(n + int(members.size()), std::move(edges)),
                        std::move(pairs));
}

DirectedGraph identify(const Network& net) {
    const int n = net.graph.n();
    std::vector<int> merged_into(n, -1);
    std::vector<bool> is_target(n, false);
    for (auto [s, t] : net.pairs) {
        merged_into[t] = s;
        is_target[t] = true;
    }
    // dense renumbering of the surviving vertices, order preserved
    std::vector<int> new_id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!is_target[v]) new_id[v] = next++;
    auto map_vertex = [&](int v) { return new_id[is_target[v] ? merged_into[v] : v]; };

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : net.graph.edges()) edges.emplace_back(map_vertex(u), map_vertex(v));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return DirectedGraph(next, std::move(edges));
}

namespace {

std::vector<int> topological_order(const DirectedGraph& g) {
    std::vector<int> indeg(g.n(), 0);
    for (auto [u, v] : g.edges()) ++indeg[v];
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = 0; v < g.n(); ++v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w : g.out_neighbors(v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return order;
}

void check_assignment(const Network& net, const CodingAssignment& asg) {
    if (int(asg.tables.size()) != net.graph.n())
        throw std::invalid_argument("assignment table count mismatch");
    std::vector<bool> is_source(net.graph.n(), false);
    for (auto [s, t] : net.pairs) is_source[s] = true;
    for (int v = 0; v < net.graph.n(); ++v) {
        if (is_source[v]) continue;
        std::size_t expected = 1;
        for (std::size_t d = net.graph.in_neighbors(v).size(); d > 0; --d)
            expected *= std::size_t(asg.s);
        if (asg.tables[v].size() != expected)
            throw std::invalid_argument("assignment table arity mismatch");
    }
}

}  // namespace

std::vector<std::uint8_t> evaluate_network(const Network& net, const CodingAssignment& asg,
                                           const std::vector<std::uint8_t>& inputs) {
    check_assignment(net, asg);
    if (inputs.size() != net.pairs.size())
        throw std::invalid_argument("one input per source required");
    const int s = asg.s;
    std::vector<std::uint8_t> value(net.graph.n(), 0);
    std::vector<bool> is_source(net.graph.n(), false);
    for (std::size_t i = 0; i < net.pairs.size(); ++i) {
        value[net.pairs[i].first] = inputs[i];
        is_source[net.pairs[i].first] = true;
    }
    for (int v : topological_order(net.graph)) {
        if (is_source[v]) continue;
        std::size_t idx = 0;
        for (int u : net.graph.in_neighbors(v)) idx = idx * s + value[u];
        value[v] = asg.tables[v][idx];
    }
    std::vector<std::uint8_t> out;
    out.reserve(net.pairs.size());
    for (auto [src, tgt] : net.pairs) out.push_back(value[tgt]);
    return out;
}

bool is_solution(const Network& net, const CodingAssignment& asg, int s) {
    if (s != asg.s) throw std::invalid_argument("alphabet mismatch");
    const int k = net.k();
    std::vector<std::uint8_t> inputs(k, 0);
    while (true) {
        if (evaluate_network(net, asg, inputs) != inputs) return false;
        int pos = k - 1;
        while (pos >= 0 && ++inputs[pos] == s) inputs[pos--] = 0;
        if (pos < 0) return true;
    }
}

CodingAssignment transfer_strategy(const DirectedGraph& g, VertexSet b,
                                   const GuessingStrategy& strat) {
    // split_graph preserves in-neighbor id order on both sides, so the graph
    // tables are reused unchanged: vertex v keeps its table, target copy
    // n + i takes the table of the i-th member of B.
    std::vector<int> members = set_members(b);
    CodingAssignment asg;
    asg.s = strat.s;
    asg.tables.resize(g.n() + int(members.size()));
    for (int v = 0; v < g.n(); ++v)
        if (!(b & vertex_bit(v))) asg.tables[v] = strat.tables[v];
    for (std::size_t i = 0; i < members.size(); ++i)
        asg.tables[g.n() + int(i)] = strat.tables[members[i]];
    return asg;
}

Theorem8Report theorem8_check(const DirectedGraph& g, VertexSet b, const GuessingStrategy& strat,
                              int s) {
    if (!is_acyclic_induced(g, g.full_set() & ~b))
        throw std::invalid_argument("B is not a split");
    const int k = std::popcount(b);
    Theorem8Report rep;
    rep.fixpoint_log = fixpoint_count(g, strat, s);
    rep.fixpoints = rep.fixpoint_log.count;
    Integer sk = integer_pow(Integer(s), static_cast<unsigned long>(k));
    rep.achieves_bound = rep.fixpoints == sk;

    Network net = split_graph(g, b);
    rep.solved = is_solution(net, transfer_strategy(g, b, strat), s);
    rep.equivalent = rep.achieves_bound == rep.solved;
    rep.split_is_minimal = k == std::popcount(minimal_split(g));

    // every word self-consistent on V \ B, for any tables: one completion per
    // assignment of B
    const std::size_t total = word_space_size(g.n(), s);
    unsigned long consistent = 0;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Word w = word_from_index(idx, g.n(), s);
        bool ok = true;
        for (int j = 0; j < g.n() && ok; ++j) {
            if (b & vertex_bit(j)) continue;
            std::size_t t = 0;
            for (int i : g.in_neighbors(j)) t = t * s + w.letters[i];
            ok = strat.tables[j][t] == w.letters[j];
        }
        if (ok) ++consistent;
    }
    rep.consistency_count = Integer(consistent);
    rep.consistency_ok = rep.consistency_count == sk;
    return rep;
}

Solvable is_solvable(const Network& net, int s) {
    DirectedGraph gn = identify(net);
    const int k = net.k();
    try {
        auto g = guessing_number(gn, s, GuessMode::Exact);
        Integer sk = integer_pow(Integer(s), static_cast<unsigned long>(k));
        return g.value.count == sk ? Solvable::Yes : Solvable::No;
    } catch (const BudgetError&) {
        // sandwich: a lower bound reaching k settles yes (g <= k always holds
        // for identified networks); an upper bound below k settles no
        try {
            auto res = guessing_number(gn, s, GuessMode::Sandwich);
            if (compare(res.value, Rational(k)) == 0) return Solvable::Yes;
            if (res.upper && *res.upper < k) return Solvable::No;
            if (res.exact) return Solvable::No;  // exact value short of k
            return Solvable::Undetermined;
        } catch (const BudgetError&) {
            return Solvable::Undetermined;
        }
    }
}

bool coding_capacity_11(const Network& net, const IneqSelector& sel) {
    return entropy_bound(identify(net), sel) == net.k();
}

}  // namespace gent

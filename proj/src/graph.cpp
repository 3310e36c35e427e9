#include <gent/graph.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <gent/errors.hpp>

namespace gent {

std::vector<int> set_members(VertexSet s) {
    std::vector<int> out;
    for (int v = 0; s; ++v, s >>= 1)
        if (s & 1) out.push_back(v);
    return out;
}

DirectedGraph::DirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1, 24]");
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (i > 0 && edges_[i] == edges_[i - 1])
            throw std::invalid_argument("duplicate edge");
    }
    in_.resize(n);
    out_.resize(n);
    in_mask_.assign(n, 0);
    out_mask_.assign(n, 0);
    for (auto [u, v] : edges_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
        out_mask_[u] |= vertex_bit(v);
        in_mask_[v] |= vertex_bit(u);
    }
    for (auto& a : in_) std::sort(a.begin(), a.end());
    // out_ is already sorted because edges_ is.
}

namespace {

bool parse_uint(const std::string& tok, int& out) {
    if (tok.empty() || tok.size() > 9) return false;
    for (char c : tok)
        if (c < '0' || c > '9') return false;
    out = std::stoi(tok);
    return true;
}

std::vector<std::string> split_single_spaces(const std::string& line, int lineno) {
    std::vector<std::string> toks;
    size_t i = 0;
    while (i < line.size()) {
        size_t j = line.find(' ', i);
        if (j == std::string::npos) j = line.size();
        if (j == i) throw ParseError(lineno, "tokens must be separated by single spaces");
        toks.push_back(line.substr(i, j - i));
        i = j + 1;
        if (i == line.size()) throw ParseError(lineno, "trailing space");
    }
    return toks;
}

std::string strip_eol(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
        line.pop_back();
    return line;
}

}  // namespace

// Shared by parse_graph and parse_network: returns (graph, pair lines).
namespace detail {

DirectedGraph parse_graph_lines(const std::string& text, bool allow_pairs,
                                std::vector<std::pair<int, int>>* pairs,
                                std::vector<int>* pair_lines) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_eol(raw);
        if (line.empty() || line[0] == '#') continue;
        auto toks = split_single_spaces(line, lineno);
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "nodes")
                throw ParseError(lineno, "expected 'nodes <n>'");
            if (!parse_uint(toks[1], n) || n < 1 || n > kMaxVertices)
                throw ParseError(lineno, "node count must be an integer in [1, 24]");
            continue;
        }
        if (allow_pairs && toks[0] == "pair") {
            int s, t;
            if (toks.size() != 3 || !parse_uint(toks[1], s) || !parse_uint(toks[2], t))
                throw ParseError(lineno, "expected 'pair <source> <target>'");
            if (s >= n || t >= n) throw ParseError(lineno, "pair endpoint out of range");
            pairs->emplace_back(s, t);
            pair_lines->push_back(lineno);
            continue;
        }
        int u, v;
        if (toks.size() != 3 || !parse_uint(toks[0], u) || !parse_uint(toks[2], v))
            throw ParseError(lineno, "expected 'u -> v' or 'u <-> v'");
        if (u >= n || v >= n) throw ParseError(lineno, "vertex index out of range");
        bool bidir;
        if (toks[1] == "->")
            bidir = false;
        else if (toks[1] == "<->")
            bidir = true;
        else
            throw ParseError(lineno, "edge arrow must be '->' or '<->'");
        if (!seen.insert({u, v}).second)
            throw ParseError(lineno, "duplicate edge");
        edges.emplace_back(u, v);
        if (bidir) {
            if (!seen.insert({v, u}).second)
                throw ParseError(lineno, "duplicate edge");
            edges.emplace_back(v, u);
        }
    }
    if (n < 0) throw ParseError(lineno, "missing 'nodes <n>' line");
    return DirectedGraph(n, std::move(edges));
}

}  // namespace detail

DirectedGraph parse_graph(const std::string& text) {
    return detail::parse_graph_lines(text, false, nullptr, nullptr);
}

std::string to_text(const DirectedGraph& g) {
    std::ostringstream out;
    out << "nodes " << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " -> " << v << "\n";
    return out.str();
}

bool is_acyclic_induced(const DirectedGraph& g, VertexSet sub) {
    // Repeatedly peel vertices with no out-edges inside the set. A self-loop
    // vertex never peels, so it is reported as a cycle.
    VertexSet s = sub;
    bool progress = true;
    while (s && progress) {
        progress = false;
        VertexSet rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((g.out_mask(v) & s) == 0) {
                s &= ~vertex_bit(v);
                progress = true;
            }
        }
    }
    return s == 0;
}

bool is_acyclic(const DirectedGraph& g) { return is_acyclic_induced(g, g.full_set()); }

DirectedGraph reverse(const DirectedGraph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(v, u);
    return DirectedGraph(g.n(), std::move(edges));
}

DirectedGraph shift(const DirectedGraph& g, int t) {
    if (t < 0 || t >= g.n()) throw std::invalid_argument("shift amount must be in [0, n)");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(u, (v + t) % g.n());
    return DirectedGraph(g.n(), std::move(edges));
}

AcyclicSearchResult max_induced_acyclic(const DirectedGraph& g) {
    const int n = g.n();
    const std::uint32_t total = VertexSet(1) << n;
    std::vector<bool> acyclic(total, false);
    acyclic[0] = true;
    AcyclicSearchResult best{0, 0};
    for (VertexSet s = 1; s < total; ++s) {
        // If v has no out-edge inside s, every cycle of s avoids v.
        VertexSet rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((g.out_mask(v) & s) == 0) {
                acyclic[s] = acyclic[s & ~vertex_bit(v)];
                break;
            }
        }
        if (acyclic[s]) {
            int size = std::popcount(s);
            if (size > best.size) best = {size, s};
        }
    }
    return best;
}

VertexSet minimal_split(const DirectedGraph& g) {
    return g.full_set() & ~max_induced_acyclic(g).witness;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

std::uint64_t adjacency_key(const DirectedGraph& g) {
    std::uint64_t key = 0;
    for (auto [u, v] : g.edges()) key |= std::uint64_t(1) << (u * g.n() + v);
    return key;
}

std::uint64_t permuted_key(std::uint64_t key, const std::vector<int>& perm, int n) {
    std::uint64_t out = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (key & (std::uint64_t(1) << (u * n + v)))
                out |= std::uint64_t(1) << (perm[u] * n + perm[v]);
    return out;
}

DirectedGraph graph_from_key(std::uint64_t key, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (key & (std::uint64_t(1) << (u * n + v))) edges.emplace_back(u, v);
    return DirectedGraph(n, std::move(edges));
}

}  // namespace

std::uint64_t canonical_key(const DirectedGraph& g) {
    if (g.n() > 8) throw BudgetError("canonical_key supports n <= 8");
    std::uint64_t key = adjacency_key(g);
    std::uint64_t best = ~std::uint64_t(0);
    for (const auto& perm : all_permutations(g.n()))
        best = std::min(best, permuted_key(key, perm, g.n()));
    return best;
}

bool isomorphic(const DirectedGraph& a, const DirectedGraph& b) {
    if (a.n() != b.n()) return false;
    if (a.edges().size() != b.edges().size()) return false;
    return canonical_key(a) == canonical_key(b);
}

std::vector<DirectedGraph> enumerate_tournaments(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("tournament enumeration supports 2 <= n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const auto perms = all_permutations(n);
    std::set<std::uint64_t> canon;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs.size()); ++mask) {
        std::uint64_t key = 0;
        for (size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            if (mask & (std::uint32_t(1) << p))
                key |= std::uint64_t(1) << (i * n + j);
            else
                key |= std::uint64_t(1) << (j * n + i);
        }
        std::uint64_t best = ~std::uint64_t(0);
        for (const auto& perm : perms) best = std::min(best, permuted_key(key, perm, n));
        canon.insert(best);
    }
    std::vector<DirectedGraph> out;
    out.reserve(canon.size());
    for (std::uint64_t key : canon) out.push_back(graph_from_key(key, n));
    return out;
}

DirectedGraph bidirected_cycle(int n) {
    std::set<std::pair<int, int>> edges;  // n <= 2 would otherwise duplicate
    for (int i = 0; i < n; ++i) {
        edges.insert({i, (i + 1) % n});
        edges.insert({(i + 1) % n, i});
    }
    return DirectedGraph(n, {edges.begin(), edges.end()});
}

DirectedGraph directed_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return DirectedGraph(n, std::move(edges));
}

DirectedGraph bidirected_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.emplace_back(i, j);
    return DirectedGraph(n, std::move(edges));
}

}  // namespace gent

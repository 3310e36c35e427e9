#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gent {

// Subset of {0..n-1} as a bit set; bit j = vertex j. Graphs are capped at
// n <= 24 so every subset fits a 32-bit word.
using VertexSet = std::uint32_t;

constexpr int kMaxVertices = 24;

inline VertexSet vertex_bit(int v) { return VertexSet(1) << v; }
std::vector<int> set_members(VertexSet s);

// Directed graph on vertices {0..n-1}; self-loops allowed, edge set
// duplicate-free, a bidirected edge is stored as the two ordered pairs.
class DirectedGraph {
public:
    DirectedGraph() = default;
    // Validates ranges and rejects duplicate edges.
    DirectedGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const { return out_mask_[u] & vertex_bit(v); }

    // Sorted ascending; the argument-order convention for every lookup table.
    const std::vector<int>& in_neighbors(int j) const { return in_[j]; }
    const std::vector<int>& out_neighbors(int u) const { return out_[u]; }
    VertexSet in_mask(int j) const { return in_mask_[j]; }
    VertexSet out_mask(int u) const { return out_mask_[u]; }
    VertexSet full_set() const { return n_ == 0 ? 0 : (VertexSet(1) << n_) - 1; }

    bool operator==(const DirectedGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // sorted
    std::vector<std::vector<int>> in_, out_;
    std::vector<VertexSet> in_mask_, out_mask_;
};

// Graph file format: comment lines starting '#', "nodes <n>", then one edge
// per line, "u -> v" or "u <-> v". Rejects trailing garbage; throws
// ParseError with the offending line number.
DirectedGraph parse_graph(const std::string& text);
std::string to_text(const DirectedGraph& g);

// A self-loop counts as a cycle.
bool is_acyclic(const DirectedGraph& g);
bool is_acyclic_induced(const DirectedGraph& g, VertexSet sub);

DirectedGraph reverse(const DirectedGraph& g);

// Shifted graph: (u, v) in g  <=>  (u, (v + t) mod n) in result; 0 <= t < n.
DirectedGraph shift(const DirectedGraph& g, int t);

struct AcyclicSearchResult {
    int size = 0;
    VertexSet witness = 0;
};

// Largest induced acyclic subgraph (acyclic independence number); exhaustive
// subset dynamic program, n <= 24.
AcyclicSearchResult max_induced_acyclic(const DirectedGraph& g);

// Minimum-size B with V \ B inducing an acyclic subgraph.
VertexSet minimal_split(const DirectedGraph& g);

// One representative per isomorphism class of K_n orientations, 2 <= n <= 6,
// ordered by canonical adjacency key.
std::vector<DirectedGraph> enumerate_tournaments(int n);

// Minimum adjacency-matrix bit string over all vertex permutations; n <= 8.
std::uint64_t canonical_key(const DirectedGraph& g);
bool isomorphic(const DirectedGraph& a, const DirectedGraph& b);

DirectedGraph bidirected_cycle(int n);
DirectedGraph directed_cycle(int n);
DirectedGraph bidirected_complete(int n);

}  // namespace gent

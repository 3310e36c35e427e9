#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gent/code_search.hpp>
#include <gent/entropy_bounds.hpp>
#include <gent/graph.hpp>

namespace gent {

// Multiple-unicast network: acyclic digraph with k ordered (source, target)
// pairs; sources have in-degree 0 and all pair endpoints are distinct.
struct Network {
    DirectedGraph graph;
    std::vector<std::pair<int, int>> pairs;

    int k() const { return int(pairs.size()); }
};

Network make_network(DirectedGraph g, std::vector<std::pair<int, int>> pairs);

// Network file format: the graph format plus one "pair <source> <target>"
// line per unicast pair.
Network parse_network(const std::string& text);
std::string to_text(const Network& net);

// Per-vertex lookup tables (same shape and argument order as
// GuessingStrategy tables); sources carry empty tables.
struct CodingAssignment {
    int s = 0;
    std::vector<std::vector<std::uint8_t>> tables;
};

// Duplicates each b in B into source b (keeps b's outgoing edges, original
// id) and target n + rank(b) (inherits b's incoming edges). Requires V \ B
// induced acyclic. Tables written for the original graph transfer verbatim:
// in-neighbor ids are preserved on both sides of the split.
Network split_graph(const DirectedGraph& g, VertexSet b);

// Merges each (source, target) pair into one vertex, keeping all edges;
// inverse of split_graph up to isomorphism.
DirectedGraph identify(const Network& net);

// Topological-order circuit evaluation: inputs are the source values in pair
// order; returns the target values in pair order.
std::vector<std::uint8_t> evaluate_network(const Network& net, const CodingAssignment& asg,
                                           const std::vector<std::uint8_t>& inputs);

// True iff every one of the s^k input tuples is reproduced at the targets.
bool is_solution(const Network& net, const CodingAssignment& asg, int s);

// The coding assignment on split_graph(g, B) induced by per-vertex guessing
// functions on g.
CodingAssignment transfer_strategy(const DirectedGraph& g, VertexSet b,
                                   const GuessingStrategy& strat);

struct Theorem8Report {
    LogValue fixpoint_log;       // log_s of the fixpoint count on g
    Integer fixpoints;           // the count itself
    bool achieves_bound = false; // fixpoint count == s^k
    bool solved = false;         // transferred tables solve the split network
    bool equivalent = false;     // achieves_bound == solved
    bool split_is_minimal = false;
    Integer consistency_count;   // words self-consistent on V \ B
    bool consistency_ok = false; // consistency_count == s^k for any tables
};

Theorem8Report theorem8_check(const DirectedGraph& g, VertexSet b, const GuessingStrategy& strat,
                              int s);

enum class Solvable { Yes, No, Undetermined };

// Solvability over the fixed alphabet: the identified graph has guessing
// number exactly k. Falls back to the sandwich when the exact search exceeds
// its budget; never guesses.
Solvable is_solvable(const Network& net, int s);

// (1,1) coding capacity per the entropy-like relaxation: the identified
// graph's entropy bound equals k.
bool coding_capacity_11(const Network& net, const IneqSelector& sel);

}  // namespace gent

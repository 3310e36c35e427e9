#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gent/bitgraph.hpp>
#include <gent/graph.hpp>
#include <gent/logvalue.hpp>

namespace gent {

// A tuple in A^n, A = {0..s-1}; letters[j] is the value at vertex j.
struct Word {
    std::vector<std::uint8_t> letters;
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;
};

// Duplicate-free word set over a common (n, s). Validity with respect to a
// graph is checked by validate_code, never assumed.
struct Code {
    int n = 0;
    int s = 0;
    std::vector<Word> words;  // sorted

    std::size_t size() const { return words.size(); }
};

// Per-vertex total lookup tables from in-neighbor tuples to letters. Tuples
// are indexed base-s with the smallest in-neighbor id as the most significant
// digit; an in-degree-0 vertex has a single constant entry.
struct GuessingStrategy {
    int n = 0;
    int s = 0;
    std::vector<std::vector<std::uint8_t>> tables;
};

// Undirected conflict relation on A^n, materialized as bit-set adjacency.
struct ConfusionGraph {
    int n = 0;
    int s = 0;
    BitGraph graph;  // vertex = word index
};

// Word index packing: vertex 0 is the most significant base-s digit, so the
// numeric order of indices is the lexicographic order of words.
std::size_t word_space_size(int n, int s);  // s^n, BudgetError beyond 2^20
std::size_t word_index(const Word& w, int s);
Word word_from_index(std::size_t idx, int n, int s);
std::string word_to_string(const Word& w);       // s <= 10
Word word_from_string(const std::string& text, int s);

// True iff some vertex sees equal in-neighbor values in u and v but differs:
// the two words cannot coexist in a graph code.
bool conflicts(const DirectedGraph& g, int s, const Word& u, const Word& v);

// Materializes the conflict relation; s^n <= 2^15 (adjacency matrix budget).
ConfusionGraph build_confusion_graph(const DirectedGraph& g, int s);

enum class SearchMode { Exact, LowerBoundOnly };

// Maximum-cardinality conflict-free word set (exact branch and bound over
// the confusion graph), or a maximal code from constructions plus a greedy
// sweep in LowerBoundOnly mode.
Code max_graph_code(const DirectedGraph& g, int s, SearchMode mode = SearchMode::Exact);

enum class GuessMode { Exact, Sandwich };

struct GuessingResult {
    bool exact = false;
    LogValue value;                 // log_s of the best code found
    std::optional<Rational> upper;  // Shannon-entropy upper bound, sandwich mode
    Code witness;
};

// g(G, s) = log_s |max code|. Sandwich mode reports exact only when the
// constructed/greedy lower bound meets the entropic upper bound exactly.
GuessingResult guessing_number(const DirectedGraph& g, int s, GuessMode mode = GuessMode::Exact);

// Tables realized by the code's words; unrealized tuples map to letter 0.
GuessingStrategy strategy_from_code(const DirectedGraph& g, const Code& code);

// Number of words fixed by the induced map, as log_s; the strategy's success
// probability is count / s^n.
LogValue fixpoint_count(const DirectedGraph& g, const GuessingStrategy& strat, int s);

bool validate_code(const DirectedGraph& g, const Code& code);

struct Coloring {
    int n = 0;
    int s = 0;
    int num_colors = 0;
    std::vector<int> color;  // indexed by word index
};

struct IndexCodeResult {
    LogValue length;  // log_s(number of colors)
    Coloring coloring;
};

enum class IndexMode { Exact, UpperBoundOnly };

// Minimal index code: chromatic number of the confusion graph (exact search
// for s^n <= 2^15); UpperBoundOnly uses the pair-sum construction on
// bidirected cycles with square s, else a greedy coloring.
IndexCodeResult min_index_code(const DirectedGraph& g, int s, IndexMode mode = IndexMode::Exact);

// n - i(G, s), kept as the exact pair (n, log_s m).
struct PublicGuessingNumber {
    int n = 0;
    LogValue index_count;
};

PublicGuessingNumber public_guessing_number(const DirectedGraph& g, int s,
                                            IndexMode mode = IndexMode::Exact);

// three-way: value <=> n - log_s(m)
int compare_with_public(const LogValue& value, const PublicGuessingNumber& pub);

// log_s of the number of distinct projections of the code onto S. Equals the
// uniform-distribution entropy H(S) when projection multiplicities are equal
// and upper-bounds it otherwise.
LogValue code_entropy(const Code& code, VertexSet subset);

// Constructions used by sandwich modes and tests.
std::optional<Code> lr_pair_cycle_code(const DirectedGraph& g, int s);
std::optional<Code> mod_sum_complete_code(const DirectedGraph& g, int s);
std::optional<Coloring> pair_sum_cycle_coloring(const DirectedGraph& g, int s);
Code greedy_maximal_code(const DirectedGraph& g, int s);

}  // namespace gent

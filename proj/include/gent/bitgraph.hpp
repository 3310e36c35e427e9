#pragma once

#include <cstdint>
#include <vector>

namespace gent {

// Undirected graph on dense vertex ids with bit-set adjacency rows; the
// search kernel behind maximum-code and chromatic-number computations.
class BitGraph {
public:
    BitGraph() = default;
    explicit BitGraph(int n);

    int size() const { return n_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const {
        return row_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63) & 1;
    }
    std::size_t edge_count() const;
    BitGraph complement() const;

    int words() const { return words_; }
    const std::uint64_t* row(int v) const { return row_.data() + std::size_t(v) * words_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> row_;
};

// Exact maximum independent set via branch and bound on the complement
// (clique search with greedy-coloring bounds).
std::vector<int> max_independent_set(const BitGraph& g);

// Greedy sequential coloring in vertex order; returns the color classes.
std::vector<int> greedy_coloring(const BitGraph& g, int& num_colors);

// Exact chromatic number with a DSATUR-style branch and bound; also returns
// a witness coloring.
int exact_chromatic_number(const BitGraph& g, std::vector<int>& coloring);

}  // namespace gent

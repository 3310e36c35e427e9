#include <gent/bitgraph.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace gent {

BitGraph::BitGraph(int n) : n_(n), words_((n + 63) / 64), row_(std::size_t(n) * words_, 0) {}

void BitGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("BitGraph is loop-free");
    row_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    row_[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

std::size_t BitGraph::edge_count() const {
    std::size_t total = 0;
    for (auto w : row_) total += std::popcount(w);
    return total / 2;
}

BitGraph BitGraph::complement() const {
    BitGraph c(n_);
    for (int v = 0; v < n_; ++v) {
        const std::uint64_t* src = row(v);
        std::uint64_t* dst = c.row_.data() + std::size_t(v) * words_;
        for (int w = 0; w < words_; ++w) dst[w] = ~src[w];
        dst[v >> 6] &= ~(std::uint64_t(1) << (v & 63));  // keep loop-free
        if (n_ & 63) dst[words_ - 1] &= (std::uint64_t(1) << (n_ & 63)) - 1;
    }
    return c;
}

namespace {

bool intersects(const std::uint64_t* a, const std::uint64_t* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

// Tomita-style maximum clique with greedy-coloring bounds.
class CliqueSolver {
public:
    explicit CliqueSolver(const BitGraph& g) : g_(g), words_(g.words()) {}

    std::vector<int> solve() {
        std::vector<int> cand(g_.size());
        std::iota(cand.begin(), cand.end(), 0);
        // high-degree vertices first
        std::vector<int> deg(g_.size(), 0);
        for (int v = 0; v < g_.size(); ++v) {
            int d = 0;
            for (int w = 0; w < words_; ++w) d += std::popcount(g_.row(v)[w]);
            deg[v] = d;
        }
        std::stable_sort(cand.begin(), cand.end(),
                         [&](int a, int b) { return deg[a] > deg[b]; });
        expand(cand);
        return best_;
    }

private:
    const BitGraph& g_;
    int words_;
    std::vector<int> best_, cur_;

    void expand(const std::vector<int>& cand) {
        if (cand.empty()) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        // greedy-color the candidates; color number bounds the clique size
        std::vector<std::vector<std::uint64_t>> classes;
        std::vector<int> color(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            std::size_t c = 0;
            while (c < classes.size() && intersects(classes[c].data(), g_.row(v), words_)) ++c;
            if (c == classes.size()) classes.emplace_back(words_, 0);
            classes[c][v >> 6] |= std::uint64_t(1) << (v & 63);
            color[i] = int(c) + 1;
        }
        std::vector<int> order(cand.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return color[a] < color[b]; });

        for (std::size_t oi = order.size(); oi-- > 0;) {
            int i = order[oi];
            int v = cand[i];
            if (cur_.size() + color[i] <= best_.size()) return;
            std::vector<int> next;
            next.reserve(oi);
            for (std::size_t oj = 0; oj < oi; ++oj) {
                int u = cand[order[oj]];
                if (g_.adjacent(u, v)) next.push_back(u);
            }
            cur_.push_back(v);
            expand(next);
            cur_.pop_back();
        }
    }
};

int saturation(const BitGraph& g, int v, const std::vector<std::vector<std::uint64_t>>& classes) {
    int sat = 0;
    for (const auto& cls : classes)
        if (intersects(cls.data(), g.row(v), g.words())) ++sat;
    return sat;
}

class ChromaticSolver {
public:
    explicit ChromaticSolver(const BitGraph& g) : g_(g), n_(g.size()), words_(g.words()) {}

    int solve(std::vector<int>& out_coloring) {
        best_coloring_ = ::gent::greedy_coloring(g_, best_k_);
        clique_lb_ = int(CliqueSolver(g_).solve().size());
        if (best_k_ > clique_lb_) {
            coloring_.assign(n_, -1);
            recurse(0);
        }
        out_coloring = best_coloring_;
        return best_k_;
    }

private:
    const BitGraph& g_;
    int n_, words_;
    int best_k_ = 0, clique_lb_ = 0;
    bool done_ = false;
    std::vector<int> best_coloring_, coloring_;
    std::vector<std::vector<std::uint64_t>> classes_;

    void recurse(int colored) {
        if (done_ || int(classes_.size()) >= best_k_) return;
        if (colored == n_) {
            best_k_ = int(classes_.size());
            best_coloring_ = coloring_;
            if (best_k_ == clique_lb_) done_ = true;
            return;
        }
        // DSATUR pick: highest saturation, ties by degree then id
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (coloring_[v] >= 0) continue;
            int sat = saturation(g_, v, classes_);
            int deg = 0;
            for (int w = 0; w < words_; ++w) deg += std::popcount(g_.row(v)[w]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            if (intersects(classes_[c].data(), g_.row(pick), words_)) continue;
            assign(pick, int(c));
            recurse(colored + 1);
            unassign(pick, int(c));
            if (done_) return;
        }
        if (int(classes_.size()) + 1 < best_k_) {
            classes_.emplace_back(words_, 0);
            assign(pick, int(classes_.size()) - 1);
            recurse(colored + 1);
            unassign(pick, int(classes_.size()) - 1);
            classes_.pop_back();
        }
    }

    void assign(int v, int c) {
        coloring_[v] = c;
        classes_[c][v >> 6] |= std::uint64_t(1) << (v & 63);
    }
    void unassign(int v, int c) {
        coloring_[v] = -1;
        classes_[c][v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }
};

}  // namespace

std::vector<int> max_independent_set(const BitGraph& g) {
    BitGraph comp = g.complement();
    auto clique = CliqueSolver(comp).solve();
    std::sort(clique.begin(), clique.end());
    return clique;
}

std::vector<int> greedy_coloring(const BitGraph& g, int& num_colors) {
    std::vector<std::vector<std::uint64_t>> classes;
    std::vector<int> color(g.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        std::size_t c = 0;
        while (c < classes.size() && intersects(classes[c].data(), g.row(v), g.words())) ++c;
        if (c == classes.size()) classes.emplace_back(g.words(), 0);
        classes[c][v >> 6] |= std::uint64_t(1) << (v & 63);
        color[v] = int(c);
    }
    num_colors = int(classes.size());
    return color;
}

int exact_chromatic_number(const BitGraph& g, std::vector<int>& coloring) {
    if (g.size() == 0) {
        coloring.clear();
        return 0;
    }
    return ChromaticSolver(g).solve(coloring);
}

}  // namespace gent

#include <gent/code_search.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <gent/entropy_bounds.hpp>
#include <gent/errors.hpp>

namespace gent {

namespace {

constexpr std::size_t kWordBudget = std::size_t(1) << 20;
constexpr std::size_t kMatrixBudget = std::size_t(1) << 15;

void check_alphabet(int s) {
    if (s < 2) throw std::invalid_argument("alphabet size must be >= 2");
}

void check_word(const DirectedGraph& g, int s, const Word& w) {
    if (int(w.letters.size()) != g.n()) throw std::invalid_argument("word length mismatch");
    for (auto c : w.letters)
        if (c >= s) throw std::invalid_argument("letter out of alphabet range");
}

// in-neighbor tuple index of word w at vertex j, smallest id most significant
std::size_t projection_index(const DirectedGraph& g, int s, const Word& w, int j) {
    std::size_t idx = 0;
    for (int i : g.in_neighbors(j)) idx = idx * s + w.letters[i];
    return idx;
}

}  // namespace

std::size_t word_space_size(int n, int s) {
    check_alphabet(s);
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= std::size_t(s);
        if (total > kWordBudget) throw BudgetError("word space exceeds the 2^20 budget");
    }
    return total;
}

std::size_t word_index(const Word& w, int s) {
    std::size_t idx = 0;
    for (auto c : w.letters) idx = idx * s + c;
    return idx;
}

Word word_from_index(std::size_t idx, int n, int s) {
    Word w;
    w.letters.assign(n, 0);
    for (int j = n - 1; j >= 0; --j) {
        w.letters[j] = std::uint8_t(idx % s);
        idx /= s;
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::string out;
    out.reserve(w.letters.size());
    for (auto c : w.letters) {
        if (c > 9) throw std::invalid_argument("digit-string words require s <= 10");
        out.push_back(char('0' + c));
    }
    return out;
}

Word word_from_string(const std::string& text, int s) {
    Word w;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad word digit");
        int v = c - '0';
        if (v >= s) throw std::invalid_argument("word digit out of alphabet range");
        w.letters.push_back(std::uint8_t(v));
    }
    return w;
}

bool conflicts(const DirectedGraph& g, int s, const Word& u, const Word& v) {
    check_word(g, s, u);
    check_word(g, s, v);
    for (int j = 0; j < g.n(); ++j) {
        if (u.letters[j] == v.letters[j]) continue;
        bool agree = true;
        for (int i : g.in_neighbors(j))
            if (u.letters[i] != v.letters[i]) {
                agree = false;
                break;
            }
        if (agree) return true;
    }
    return false;
}

ConfusionGraph build_confusion_graph(const DirectedGraph& g, int s) {
    const std::size_t total = word_space_size(g.n(), s);
    if (total > kMatrixBudget)
        throw BudgetError("confusion-graph adjacency matrix exceeds the 2^15-word budget");

    ConfusionGraph cg;
    cg.n = g.n();
    cg.s = s;
    cg.graph = BitGraph(int(total));

    // letters of word idx, refreshed incrementally per word
    std::vector<Word> words(total);
    for (std::size_t idx = 0; idx < total; ++idx) words[idx] = word_from_index(idx, g.n(), s);

    // group words by projection onto N-(j); within a group, words with
    // different letters at j conflict
    for (int j = 0; j < g.n(); ++j) {
        if (g.in_mask(j) & vertex_bit(j)) continue;  // self-loop: never a witness
        std::unordered_map<std::size_t, std::vector<std::vector<std::uint32_t>>> buckets;
        for (std::size_t idx = 0; idx < total; ++idx) {
            auto& classes = buckets[projection_index(g, s, words[idx], j)];
            if (classes.empty()) classes.resize(s);
            classes[words[idx].letters[j]].push_back(std::uint32_t(idx));
        }
        for (auto& [key, classes] : buckets)
            for (int a = 0; a < s; ++a)
                for (int b = a + 1; b < s; ++b)
                    for (auto u : classes[a])
                        for (auto v : classes[b]) cg.graph.add_edge(int(u), int(v));
    }
    return cg;
}

namespace {

Code code_from_indices(const DirectedGraph& g, int s, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    Code code;
    code.n = g.n();
    code.s = s;
    for (auto idx : indices) code.words.push_back(word_from_index(idx, g.n(), s));
    return code;
}

}  // namespace

std::optional<Code> lr_pair_cycle_code(const DirectedGraph& g, int s) {
    int t = int(std::lround(std::sqrt(double(s))));
    if (t * t != s) return std::nullopt;
    if (g.n() < 3 || !(g == bidirected_cycle(g.n()))) return std::nullopt;
    const int n = g.n();
    // letter at vertex i encodes the pair (r_i, r_{i+1}) as r_i * t + r_{i+1}
    std::vector<std::size_t> indices;
    std::vector<int> r(n, 0);
    while (true) {
        Word w;
        w.letters.resize(n);
        for (int i = 0; i < n; ++i) w.letters[i] = std::uint8_t(r[i] * t + r[(i + 1) % n]);
        indices.push_back(word_index(w, s));
        int pos = n - 1;
        while (pos >= 0 && ++r[pos] == t) r[pos--] = 0;
        if (pos < 0) break;
    }
    return code_from_indices(g, s, std::move(indices));
}

std::optional<Code> mod_sum_complete_code(const DirectedGraph& g, int s) {
    if (!(g == bidirected_complete(g.n()))) return std::nullopt;
    const std::size_t total = word_space_size(g.n(), s);
    std::vector<std::size_t> indices;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Word w = word_from_index(idx, g.n(), s);
        int sum = 0;
        for (auto c : w.letters) sum += c;
        if (sum % s == 0) indices.push_back(idx);
    }
    return code_from_indices(g, s, std::move(indices));
}

Code greedy_maximal_code(const DirectedGraph& g, int s) {
    const std::size_t total = word_space_size(g.n(), s);
    // seed with the best applicable construction, then extend to maximal;
    // the zero-sum code (s^{n-1} words) beats the pair code where both apply
    std::vector<Word> accepted;
    if (auto c = mod_sum_complete_code(g, s))
        accepted = c->words;
    else if (auto c2 = lr_pair_cycle_code(g, s))
        accepted = c2->words;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Word w = word_from_index(idx, g.n(), s);
        bool ok = true;
        for (const auto& a : accepted) {
            if (a == w) {
                ok = false;
                break;
            }
            if (conflicts(g, s, a, w)) {
                ok = false;
                break;
            }
        }
        if (ok) accepted.push_back(std::move(w));
    }
    std::sort(accepted.begin(), accepted.end());
    Code code;
    code.n = g.n();
    code.s = s;
    code.words = std::move(accepted);
    return code;
}

Code max_graph_code(const DirectedGraph& g, int s, SearchMode mode) {
    if (mode == SearchMode::LowerBoundOnly) return greedy_maximal_code(g, s);
    ConfusionGraph cg = build_confusion_graph(g, s);
    auto mis = max_independent_set(cg.graph);
    std::vector<std::size_t> indices(mis.begin(), mis.end());
    return code_from_indices(g, s, std::move(indices));
}

GuessingResult guessing_number(const DirectedGraph& g, int s, GuessMode mode) {
    GuessingResult res;
    if (mode == GuessMode::Exact) {
        res.witness = max_graph_code(g, s, SearchMode::Exact);
        res.value = LogValue(Integer(static_cast<unsigned long>(res.witness.size())), s);
        res.exact = true;
        return res;
    }
    res.witness = max_graph_code(g, s, SearchMode::LowerBoundOnly);
    res.value = LogValue(Integer(static_cast<unsigned long>(res.witness.size())), s);
    res.upper = entropy_bound(g, IneqSelector::shannon());
    res.exact = compare(res.value, *res.upper) == 0;
    return res;
}

bool validate_code(const DirectedGraph& g, const Code& code) {
    if (code.n != g.n()) throw std::invalid_argument("code dimension mismatch");
    for (const auto& w : code.words) check_word(g, code.s, w);
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
            if (code.words[i] == code.words[j]) return false;
            if (conflicts(g, code.s, code.words[i], code.words[j])) return false;
        }
    return true;
}

GuessingStrategy strategy_from_code(const DirectedGraph& g, const Code& code) {
    if (!validate_code(g, code)) throw std::invalid_argument("invalid code for this graph");
    const int s = code.s;
    GuessingStrategy strat;
    strat.n = g.n();
    strat.s = s;
    strat.tables.resize(g.n());
    for (int j = 0; j < g.n(); ++j) {
        std::size_t size = 1;
        for (std::size_t d = g.in_neighbors(j).size(); d > 0; --d) size *= s;
        std::vector<int> table(size, -1);
        for (const auto& w : code.words) {
            std::size_t idx = projection_index(g, s, w, j);
            if (table[idx] >= 0 && table[idx] != w.letters[j])
                throw std::logic_error("valid code produced an ambiguous table");
            table[idx] = w.letters[j];
        }
        strat.tables[j].assign(size, 0);
        for (std::size_t k = 0; k < size; ++k)
            if (table[k] >= 0) strat.tables[j][k] = std::uint8_t(table[k]);
    }
    return strat;
}

LogValue fixpoint_count(const DirectedGraph& g, const GuessingStrategy& strat, int s) {
    if (strat.n != g.n()) throw std::invalid_argument("strategy dimension mismatch");
    for (int j = 0; j < g.n(); ++j) {
        std::size_t expected = 1;
        for (std::size_t d = g.in_neighbors(j).size(); d > 0; --d) expected *= s;
        if (strat.tables[j].size() != expected)
            throw std::invalid_argument("strategy table arity mismatch");
    }
    const std::size_t total = word_space_size(g.n(), s);
    unsigned long count = 0;
    Word w;
    for (std::size_t idx = 0; idx < total; ++idx) {
        w = word_from_index(idx, g.n(), s);
        bool fixed = true;
        for (int j = 0; j < g.n() && fixed; ++j)
            fixed = strat.tables[j][projection_index(g, s, w, j)] == w.letters[j];
        if (fixed) ++count;
    }
    return LogValue(Integer(count), s);
}

std::optional<Coloring> pair_sum_cycle_coloring(const DirectedGraph& g, int s) {
    int t = int(std::lround(std::sqrt(double(s))));
    if (t * t != s) return std::nullopt;
    if (g.n() < 3 || !(g == bidirected_cycle(g.n()))) return std::nullopt;
    const int n = g.n();
    const std::size_t total = word_space_size(n, s);
    Coloring col;
    col.n = n;
    col.s = s;
    col.color.assign(total, 0);
    // broadcast the t-ary sums (R_{i-1} + L_i) mod t; the classes are the
    // joint fibers, one per message tuple
    std::map<std::vector<int>, int> message_ids;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Word w = word_from_index(idx, n, s);
        std::vector<int> msg(n);
        for (int i = 0; i < n; ++i) {
            int prev = (i + n - 1) % n;
            int r_prev = w.letters[prev] % t;  // R part of the left neighbor
            int l_cur = w.letters[i] / t;      // L part of vertex i
            msg[i] = (r_prev + l_cur) % t;
        }
        auto [it, inserted] = message_ids.emplace(msg, int(message_ids.size()));
        col.color[idx] = it->second;
    }
    col.num_colors = int(message_ids.size());
    return col;
}

namespace {

Coloring greedy_confusion_coloring(const DirectedGraph& g, int s) {
    const std::size_t total = word_space_size(g.n(), s);
    Coloring col;
    col.n = g.n();
    col.s = s;
    col.color.assign(total, -1);
    std::vector<std::vector<Word>> classes;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Word w = word_from_index(idx, g.n(), s);
        int assigned = -1;
        for (std::size_t c = 0; c < classes.size() && assigned < 0; ++c) {
            bool ok = true;
            for (const auto& u : classes[c])
                if (conflicts(g, s, u, w)) {
                    ok = false;
                    break;
                }
            if (ok) assigned = int(c);
        }
        if (assigned < 0) {
            classes.emplace_back();
            assigned = int(classes.size()) - 1;
        }
        classes[assigned].push_back(w);
        col.color[idx] = assigned;
    }
    col.num_colors = int(classes.size());
    return col;
}

}  // namespace

IndexCodeResult min_index_code(const DirectedGraph& g, int s, IndexMode mode) {
    IndexCodeResult res;
    if (mode == IndexMode::Exact) {
        ConfusionGraph cg = build_confusion_graph(g, s);
        std::vector<int> coloring;
        int chi = exact_chromatic_number(cg.graph, coloring);
        res.coloring = Coloring{g.n(), s, chi, std::move(coloring)};
        res.length = LogValue(Integer(static_cast<unsigned long>(chi)), s);
        return res;
    }
    if (auto c = pair_sum_cycle_coloring(g, s))
        res.coloring = std::move(*c);
    else
        res.coloring = greedy_confusion_coloring(g, s);
    res.length = LogValue(Integer(static_cast<unsigned long>(res.coloring.num_colors)), s);
    return res;
}

PublicGuessingNumber public_guessing_number(const DirectedGraph& g, int s, IndexMode mode) {
    auto idx = min_index_code(g, s, mode);
    return PublicGuessingNumber{g.n(), idx.length};
}

int compare_with_public(const LogValue& value, const PublicGuessingNumber& pub) {
    // value <=> n - log_s(m)  <=>  log_s(count * m) <=> n
    return compare_log_sum(value, pub.index_count, Rational(pub.n));
}

LogValue code_entropy(const Code& code, VertexSet subset) {
    if (code.words.empty()) throw std::invalid_argument("code_entropy requires a non-empty code");
    std::vector<std::vector<std::uint8_t>> projections;
    projections.reserve(code.words.size());
    for (const auto& w : code.words) {
        std::vector<std::uint8_t> proj;
        for (int j = 0; j < code.n; ++j)
            if (subset & vertex_bit(j)) proj.push_back(w.letters[j]);
        projections.push_back(std::move(proj));
    }
    std::sort(projections.begin(), projections.end());
    projections.erase(std::unique(projections.begin(), projections.end()), projections.end());
    return LogValue(Integer(static_cast<unsigned long>(projections.size())), code.s);
}

}  // namespace gent

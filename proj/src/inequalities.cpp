#include <gent/inequalities.hpp>

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <gent/errors.hpp>

namespace gent {

std::vector<LinearConstraint> elemental_shannon_inequalities(int ground) {
    if (ground < 1 || ground > 13)
        throw std::invalid_argument("elemental inequalities require 1 <= ground <= 13");
    const std::uint32_t all = (std::uint32_t(1) << ground) - 1;
    std::vector<LinearConstraint> out;
    for (int i = 0; i < ground; ++i) {
        LinearConstraint c;
        c.rel = Relation::GreaterEq;
        c.add(all, 1);
        c.add(all & ~(std::uint32_t(1) << i), -1);
        c.normalize();
        out.push_back(std::move(c));
    }
    for (int i = 0; i < ground; ++i) {
        for (int j = i + 1; j < ground; ++j) {
            const std::uint32_t bi = std::uint32_t(1) << i, bj = std::uint32_t(1) << j;
            const std::uint32_t rest = all & ~(bi | bj);
            // iterate subsets K of rest, ascending
            std::uint32_t k = 0;
            while (true) {
                LinearConstraint c;
                c.rel = Relation::GreaterEq;
                add_conditional_mutual_information(c, bi, bj, k, 1);
                c.normalize();
                out.push_back(std::move(c));
                if (k == rest) break;
                k = (k - rest) & rest;  // next subset of rest
            }
        }
    }
    return out;
}

void add_conditional_mutual_information(LinearConstraint& c, std::uint32_t a, std::uint32_t b,
                                        std::uint32_t cond, const Rational& coeff) {
    c.add(a | cond, coeff);
    c.add(b | cond, coeff);
    c.add(a | b | cond, -coeff);
    c.add(cond, -coeff);
}

IneqTemplate zy_template() {
    auto ph = [](const char* s) {
        std::uint32_t m = 0;
        for (; *s; ++s) m |= std::uint32_t(1) << (*s - 'A');
        return m;
    };
    IneqTemplate t;
    // W terms
    t.terms.push_back({3, ph("CD")});
    t.terms.push_back({3, ph("AC")});
    t.terms.push_back({3, ph("AD")});
    t.terms.push_back({1, ph("BC")});
    t.terms.push_back({1, ph("BD")});
    // -U terms
    t.terms.push_back({-2, ph("C")});
    t.terms.push_back({-2, ph("D")});
    t.terms.push_back({-1, ph("A")});
    t.terms.push_back({-1, ph("AB")});
    t.terms.push_back({-4, ph("ACD")});
    t.terms.push_back({-1, ph("BCD")});
    return t;
}

Rational zy_U_value(const SetFunction& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                    std::uint32_t d) {
    return 2 * f(c) + 2 * f(d) + f(a) + f(a | b) + 4 * f(a | c | d) + f(b | c | d);
}

Rational zy_W_value(const SetFunction& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                    std::uint32_t d) {
    return 3 * f(c | d) + 3 * f(a | c) + 3 * f(a | d) + f(b | c) + f(b | d);
}

std::uint32_t IneqTemplate::placeholders_used() const {
    std::uint32_t m = 0;
    for (const auto& t : terms) m |= t.placeholders;
    return m;
}

namespace {

// Candidate groups per policy, ordered by (size, bit pattern).
std::vector<std::uint32_t> candidate_groups(int ground, ZYPolicy policy) {
    std::vector<std::uint32_t> groups;
    for (int i = 0; i < ground; ++i) groups.push_back(std::uint32_t(1) << i);
    if (policy == ZYPolicy::SingletonsAndPairs)
        for (int i = 0; i < ground; ++i)
            for (int j = i + 1; j < ground; ++j)
                groups.push_back((std::uint32_t(1) << i) | (std::uint32_t(1) << j));
    return groups;
}

void instantiate_template(const IneqTemplate& tmpl, int ground, ZYPolicy policy,
                          std::vector<LinearConstraint>& out) {
    const auto groups = candidate_groups(ground, policy);
    std::vector<int> slots = [&] {
        std::vector<int> v;
        std::uint32_t used = tmpl.placeholders_used();
        for (int p = 0; used; ++p, used >>= 1)
            if (used & 1) v.push_back(p);
        return v;
    }();

    std::vector<std::uint32_t> assigned(slots.size());
    auto emit = [&] {
        LinearConstraint c;
        c.rel = Relation::GreaterEq;
        for (const auto& term : tmpl.terms) {
            std::uint32_t subset = 0;
            std::uint32_t ph = term.placeholders;
            for (size_t s = 0; s < slots.size(); ++s)
                if (ph & (std::uint32_t(1) << slots[s])) subset |= assigned[s];
            c.add(subset, term.coeff);
        }
        c.normalize();
        out.push_back(std::move(c));
    };

    // ordered tuples of pairwise-disjoint groups, lexicographic in group index
    auto rec = [&](auto&& self, size_t slot, std::uint32_t taken) -> void {
        if (slot == slots.size()) {
            emit();
            return;
        }
        for (std::uint32_t g : groups) {
            if (g & taken) continue;
            assigned[slot] = g;
            self(self, slot + 1, taken | g);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<LinearConstraint> zy_instances(int ground, ZYPolicy policy) {
    std::vector<LinearConstraint> out;
    if (ground < 4) return out;
    instantiate_template(zy_template(), ground, policy, out);
    return out;
}

std::vector<LinearConstraint> instantiate(const InequalitySet& set, int ground) {
    std::vector<LinearConstraint> out;
    for (const auto& tmpl : set.templates) {
        if (std::popcount(tmpl.placeholders_used()) > ground) continue;
        instantiate_template(tmpl, ground, set.policy, out);
    }
    return out;
}

namespace {

struct LineParser {
    const std::string& s;
    size_t i = 0;
    int lineno;

    void skip_spaces() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool done() {
        skip_spaces();
        return i >= s.size();
    }
    bool consume(char c) {
        skip_spaces();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool consume(const std::string& tok) {
        skip_spaces();
        if (s.compare(i, tok.size(), tok) == 0) {
            i += tok.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(lineno, msg); }

    Rational number() {
        skip_spaces();
        size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        if (start == i) fail("expected a coefficient");
        std::string tok = s.substr(start, i - start);
        try {
            Rational r(tok);
            r.canonicalize();
            return r;
        } catch (...) {
            fail("bad coefficient '" + tok + "'");
        }
    }
};

}  // namespace

InequalitySet load_inequality_set(const std::string& text) {
    InequalitySet set;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool policy_seen = false;
    while (std::getline(in, raw)) {
        ++lineno;
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == '\n')) raw.pop_back();
        std::string line = raw;
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.compare(first, 7, "groups:") == 0) {
            if (policy_seen) throw ParseError(lineno, "duplicate groups header");
            policy_seen = true;
            std::string val = line.substr(first + 7);
            val.erase(0, val.find_first_not_of(" \t"));
            val.erase(val.find_last_not_of(" \t") + 1);
            if (val == "singletons")
                set.policy = ZYPolicy::Singletons;
            else if (val == "upto2")
                set.policy = ZYPolicy::SingletonsAndPairs;
            else
                throw ParseError(lineno, "groups must be 'singletons' or 'upto2'");
            continue;
        }

        LineParser p{line, first, lineno};
        IneqTemplate tmpl;
        bool first_term = true;
        while (true) {
            int sign = 1;
            if (p.consume('-'))
                sign = -1;
            else if (p.consume('+'))
                sign = 1;
            else if (!first_term)
                break;
            first_term = false;

            p.skip_spaces();
            Rational coeff = 1;
            if (p.i < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.i]))) {
                coeff = p.number();
                if (!p.consume('*')) p.fail("expected '*' after coefficient");
            }
            if (!p.consume("f(")) p.fail("expected 'f('");
            std::uint32_t placeholders = 0;
            while (true) {
                p.skip_spaces();
                if (p.i >= p.s.size()) p.fail("unterminated f(...)");
                char c = p.s[p.i];
                if (c < 'A' || c > 'Z') p.fail(std::string("unknown placeholder '") + c + "'");
                std::uint32_t bit = std::uint32_t(1) << (c - 'A');
                if (placeholders & bit)
                    p.fail(std::string("placeholder '") + c + "' repeated in one union");
                placeholders |= bit;
                ++p.i;
                if (p.consume('|')) continue;
                if (p.consume(')')) break;
                p.fail("expected '|' or ')'");
            }
            tmpl.terms.push_back({sign * coeff, placeholders});
        }
        if (!p.consume(">=") || !p.consume('0') || !p.done())
            p.fail("template must end with '>= 0'");
        if (tmpl.terms.empty()) p.fail("empty template");
        set.templates.push_back(std::move(tmpl));
    }
    return set;
}

}  // namespace gent

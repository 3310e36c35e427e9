#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gent/lp.hpp>
#include <gent/setfunction.hpp>

namespace gent {

enum class ZYPolicy { Singletons, SingletonsAndPairs };

// The elemental generating set of the polymatroidal axioms: top monotonicity
// f(V) - f(V\{i}) >= 0 and conditional mutual information positivity
// I(i; j | K) >= 0 for i < j, K subset of V\{i,j}. Implies every monotonicity
// and submodularity instance. 1 <= ground <= 13.
std::vector<LinearConstraint> elemental_shannon_inequalities(int ground);

// I_f(A;B|C) = f(AC) + f(BC) - f(ABC) - f(C) added to a constraint.
void add_conditional_mutual_information(LinearConstraint& c, std::uint32_t a, std::uint32_t b,
                                        std::uint32_t cond, const Rational& coeff);

// W - U >= 0 instances of the Zhang-Yeung inequality over ordered tuples of
// pairwise-disjoint non-empty groups drawn per policy. Empty for ground < 4.
std::vector<LinearConstraint> zy_instances(int ground, ZYPolicy policy = ZYPolicy::Singletons);

// The two sides of the Zhang-Yeung inequality, evaluated on arbitrary
// (not necessarily disjoint) subsets.
Rational zy_U_value(const SetFunction& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                    std::uint32_t d);
Rational zy_W_value(const SetFunction& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                    std::uint32_t d);

// Pluggable inequality templates: a sparse signed combination over unions of
// placeholder groups that instantiates to `sum >= 0` constraints.
struct IneqTerm {
    Rational coeff;
    std::uint32_t placeholders = 0;  // bit p = placeholder 'A' + p
};

struct IneqTemplate {
    std::vector<IneqTerm> terms;
    std::uint32_t placeholders_used() const;
};

struct InequalitySet {
    std::string name;
    ZYPolicy policy = ZYPolicy::Singletons;
    std::vector<IneqTemplate> templates;
};

// Inequality file format: '#' comments; optional "groups: singletons|upto2"
// header; one template per line as signed terms "c*f(P1|P2|...)" summed,
// ending in ">= 0". Placeholder names are single letters A, B, C, ...
InequalitySet load_inequality_set(const std::string& text);

// The built-in Zhang-Yeung template in U/W form.
IneqTemplate zy_template();

std::vector<LinearConstraint> instantiate(const InequalitySet& set, int ground);

}  // namespace gent

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gent/rational.hpp>

namespace gent {

// Rational-valued function on subsets of a ground set, indexed by bit mask;
// f(empty) = 0 always.
struct SetFunction {
    int ground = 0;
    std::vector<Rational> values;  // size 1 << ground

    SetFunction() = default;
    explicit SetFunction(int ground_size)
        : ground(ground_size), values(std::size_t(1) << ground_size) {}

    Rational& operator[](std::uint32_t subset) { return values[subset]; }
    const Rational& operator()(std::uint32_t subset) const { return values[subset]; }
};

using SparseForm = std::vector<std::pair<std::uint32_t, Rational>>;

Rational evaluate(const SparseForm& form, const SetFunction& f);

}  // namespace gent

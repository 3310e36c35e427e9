#pragma once

#include <string>

#include <gent/code_search.hpp>
#include <gent/network.hpp>

namespace gent {

// JSON wire formats. Words are digit strings for s <= 10 and integer arrays
// above; colorings map words to integers; assignment tables are flat,
// row-major over ascending in-neighbor tuples.
std::string code_to_json(const Code& code);
Code code_from_json(const std::string& text);

std::string strategy_to_json(const GuessingStrategy& strat);
GuessingStrategy strategy_from_json(const std::string& text);

std::string coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const std::string& text);

std::string assignment_to_json(const CodingAssignment& asg);
CodingAssignment assignment_from_json(const std::string& text);

}  // namespace gent

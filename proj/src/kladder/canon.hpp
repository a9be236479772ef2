#pragma once

#include <map>
#include <string>

#include "kladder/graph.hpp"

namespace kladder {

// Canonical key: two graphs receive equal keys iff they are isomorphic.
// Refinement + individualization backtracking, hard cap |V| <= 16.
std::string canonical_form(const Graph& g);

// Colored variant: keys agree iff there is a color-preserving isomorphism.
// Vertices absent from `colors` get color 0. Used for memoizing solvers whose
// state is a graph with marked vertex subsets.
std::string canonical_form_colored(const Graph& g, const std::map<int, int>& colors);

}  // namespace kladder

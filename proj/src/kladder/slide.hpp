#pragma once

#include <map>
#include <vector>

#include "kladder/decomp.hpp"
#include "kladder/graph.hpp"
#include "kladder/minors.hpp"

namespace kladder {

// Token sliding: every injection places the pattern's vertices on distinct
// host vertices, consecutive injections move exactly one token along a host
// edge, and every pattern edge is realized by some injection.
struct SlidingSequence {
  Graph pattern, host;
  std::vector<std::map<int, int>> injections;  // pattern vertex -> host vertex
};

Report validate_sliding(const SlidingSequence& s);

// Slides the k-vertex path in the tree t; requires |V(t)| >= 2k-1. Either t
// has a path on k vertices (one static injection), or all tokens start off a
// longest path and consecutive token pairs shuttle onto it one at a time,
// returning to the start position between pairs.
SlidingSequence path_sliding_in_tree(const Graph& t, int k);

// pattern x P_l as a minor of host x P_(l(2m-1)) from an m-step sliding
// sequence: each token's branch set traces its trajectory, mirrored into a
// palindromic block, then repeated l times.
MinorModel sliding_to_model(const SlidingSequence& s, int l);

// The k x l grid as a minor of t x P_(l(2m-1)), composing the two maps above.
MinorModel grid_in_ladder(int k, int l, const Graph& t);

}  // namespace kladder

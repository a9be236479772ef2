#pragma once

#include <vector>

#include "kladder/decomp.hpp"
#include "kladder/graph.hpp"

namespace kladder {

// Star-shaped cover of the graph: center U plus members whose private parts
// B \ U are pairwise disjoint. All vertex sets sorted.
struct GoodPair {
  Graph graph;
  std::vector<int> u;                      // nonempty
  std::vector<std::vector<int>> b_family;
};

Report validate_good_pair(const GoodPair& gp);

// G[U] plus a clique on U cap B for every member.
Graph torso(const GoodPair& gp);

// The pair is nice when for every member B and all equal-size Z1, Z2 inside
// the core U cap B there are |Z1| disjoint (Z1,Z2)-paths in G[B] with every
// edge between two core vertices removed. Checked on the maximal splits
// Z1 u Z2 = core only (an arbitrary pair pads to a maximal one with the
// untouched core vertices on both sides; the padding vertices are forced
// into singleton paths, so the padded family restricts back), plus an
// exhaustive cross-check over all equal-size pairs when the core has at
// most 6 vertices.
Report check_nice_pair(const GoodPair& gp);
bool is_nice_pair(const GoodPair& gp);

// Nice pair in G - X whose torso is torso(gp) - X, for X a sorted proper
// subset of U.
GoodPair restrict_pair(const GoodPair& gp, const std::vector<int>& x_set);

// U-traces of disjoint paths with endpoints in U; consecutive trace vertices
// are always torso-adjacent for a good pair.
std::vector<PathSeq> project_paths_to_torso(const GoodPair& gp,
                                            const std::vector<PathSeq>& paths);

// Converse direction, valid for nice pairs: disjoint torso paths lift to
// disjoint paths of the graph with the same endpoint sets and with U-traces
// inside the input's vertex set. Torso edges with no underlying graph edge
// are rerouted through a member via disjoint connector paths.
std::vector<PathSeq> lift_paths_from_torso(const GoodPair& gp,
                                           const std::vector<PathSeq>& torso_paths);

// A nice pair in gp.graph from a nice pair `inner` over torso(gp), with the
// same torso as `inner`. Members of gp whose core leaves inner's center are
// absorbed into an inner member containing the core (one exists, since the
// core is a torso clique).
GoodPair compose_nice_pairs(const GoodPair& gp, const GoodPair& inner);

}  // namespace kladder

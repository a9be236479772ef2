#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kladder/graph.hpp"

namespace kladder {

// Tree plus bag map; doubles as a path decomposition when the tree is a path.
// Node identities are arbitrary non-negative ints, independent of the
// decomposed graph's vertex identities.
struct TreeDecomposition {
  Graph tree;
  std::map<int, std::vector<int>> bags;  // node -> sorted vertex set

  static TreeDecomposition single_bag(const std::vector<int>& bag);

  int width() const;     // max bag size - 1; -1 when all bags empty
  int adhesion() const;  // max |W_x cap W_y| over tree edges; 0 if no edges
  bool is_path() const;
  const std::vector<int>& bag(int x) const;
};

// nullopt = ok; otherwise a human-readable description naming the violation.
using Report = std::optional<std::string>;

// Structural sanity + occupancy condition (1): usable without a graph.
Report validate_decomposition_shape(const TreeDecomposition& d);
// Conditions (1) and (2) against g: every vertex occupies a nonempty
// connected subtree, every edge lies inside some bag.
Report validate_tree_decomposition(const Graph& g, const TreeDecomposition& d);
// Decomposition of (g, s): valid tree decomposition of g[s] such that every
// component of g-s has its neighborhood inside one bag.
Report validate_gs_decomposition(const Graph& g, const std::vector<int>& s,
                                 const TreeDecomposition& d);

// Dismantling certificate: a tree of moves.
struct DismantleCert {
  std::string move;  // "base" | "remove" | "split"
  int vertex = -1;               // for remove
  std::array<int, 2> edge{-1, -1};  // for split
  std::vector<DismantleCert> children;  // 1 for remove, 2 for split (x-side, y-side)
};

// Subtree side of d after deleting tree edge xy, keeping x's component.
TreeDecomposition split_side(const TreeDecomposition& d, int x, int y);
// Remove v from every bag (v need not occur).
TreeDecomposition strip_vertex(const TreeDecomposition& d, int v);
// Intersect every bag with `keep`.
TreeDecomposition restrict_bags(const TreeDecomposition& d, const std::vector<int>& keep);

bool is_k_dismantable(const TreeDecomposition& d, int k);
// Certificate variant; nullopt iff not k-dismantable. Moves are tried in the
// fixed order: ubiquitous removals by ascending vertex, then splits by
// ascending node pair, so the certificate is reproducible.
std::optional<DismantleCert> k_dismantle_certificate(const TreeDecomposition& d, int k);
// Replays a certificate against d.
bool check_dismantle_certificate(const TreeDecomposition& d, int k,
                                 const DismantleCert& cert);

// k-dismantable decomposition of width < t, or nullopt only if td_k(g) > t.
// Backed by the exact solver in params.
std::optional<TreeDecomposition> dismantle_search(const Graph& g, int k, int t);

// Helly-type dichotomy for a family of connected subgraphs (as vertex sets):
// either dcount members with pairwise disjoint projections on the tree, or at
// most dcount-1 nodes whose bag union meets every member.
struct HellyResult {
  bool disjoint;                    // which arm
  std::vector<int> member_indices;  // Disjoint arm: indices into fam
  std::vector<int> cover_nodes;     // Cover arm: decomposition node ids
};
HellyResult helly_cover(const Graph& g, const TreeDecomposition& d,
                        const std::vector<std::vector<int>>& fam, int dcount);

// Projection of a connected subgraph (vertex set) on the decomposition tree:
// the nodes whose bags it meets; asserted connected in the tree.
std::vector<int> projection_of_subgraph(const Graph& g, const TreeDecomposition& d,
                                        const std::vector<int>& h_vertices);

// Glues k-dismantable decompositions of (g, S_i) into one of (g, union S_i):
// fold left; each component of g minus the current S gets the next part's
// decomposition restricted to it and hung below a node covering its
// neighborhood, bags unioned with that anchor bag.
struct GSPart {
  std::vector<int> s;
  TreeDecomposition d;
};
std::pair<std::vector<int>, TreeDecomposition> combine_gs_decompositions(
    const Graph& g, const std::vector<GSPart>& parts, int k);

}  // namespace kladder

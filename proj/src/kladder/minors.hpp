#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kladder/decomp.hpp"
#include "kladder/graph.hpp"

namespace kladder {

// Branch sets: pairwise disjoint, connected in host, realizing every pattern
// edge by a host edge.
struct MinorModel {
  Graph pattern, host;
  std::map<int, std::vector<int>> branch_sets;  // pattern vertex -> host set
};

Report validate_model(const MinorModel& m);

// Exhaustive search; none is returned only if no model exists.
std::optional<MinorModel> find_minor_model(const Graph& h, const Graph& g);

// Graph on [k] x [l] grid positions: each row i is the path
// (i,0)..(i,l-1); each column j induces a connected subgraph. Vertex (i,j)
// has identity i*l + j.
struct KLadder {
  int k = 0, l = 0;
  Graph graph;
  int vertex(int i, int j) const { return i * l + j; }
  std::vector<int> row(int i) const;     // path order
  std::vector<int> column(int j) const;  // ascending rows
};

// column_trees[j] is a tree on {0..k-1}, realized as column j's edges.
KLadder make_k_ladder(int k, int l, const std::vector<Graph>& column_trees);
Report validate_k_ladder(const KLadder& lad);

// Pigeonhole over the l columns' spanning-tree shapes: some tree repeats on
// >= l_target columns once the ladder is long enough; row segments between
// consecutive selected columns contract to the product's vertices.
std::pair<Graph, MinorModel> tree_times_path_from_ladder(const KLadder& lad, int l_target);

struct MonotoneWitness {
  bool increasing;           // which arm
  std::vector<int> indices;  // positions into perm, ascending
};
// Longest-increasing/decreasing DP; succeeds whenever |perm| >= (r-1)(s-1)+1.
std::optional<MonotoneWitness> erdos_szekeres(const std::vector<int>& perm, int r, int s);

struct LeavesOrPath {
  bool leaves;              // which arm
  std::vector<int> witness; // k leaves, or a path on k vertices (in order)
};
LeavesOrPath tree_leaves_or_path(const Graph& t, int k);

// Selection of member indices with a prefix of p and disjoint private
// intervals: member j meets p[0..b] only inside p[a_j..b_j], meets it at a_j,
// and the intervals appear in selection order.
struct PrivateIntervals {
  std::vector<int> members;                  // indices into subgraphs
  int prefix_end = -1;                       // index b into p
  std::vector<std::pair<int, int>> intervals;  // [a_j, b_j] index ranges in p
};
PrivateIntervals private_intervals(const Graph& g, const PathSeq& p,
                                   const std::vector<std::vector<int>>& subgraphs,
                                   int l_target);

// The full pipeline: per-row private intervals with interval contraction,
// k-1 monotone alignments, then contraction to a ladder model in g.
std::pair<KLadder, MinorModel> extract_ladder(const Graph& g,
                                              const std::vector<PathSeq>& rows,
                                              const std::vector<std::vector<int>>& connectors);

// First tree T (up to isomorphism) with T x P_l a minor of g.
std::optional<std::pair<Graph, MinorModel>> has_minor_tree_times_path(const Graph& g, int k,
                                                                      int l);

}  // namespace kladder

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kladder {

// Finite simple undirected graph with stable integer vertex identities.
// Deletions never renumber the surviving vertices, so identity sets may have
// holes. Graphs are immutable values: every "mutation" returns a new graph.
class Graph {
 public:
  Graph() = default;

  // Vertices 0..n-1, edges as unordered pairs.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // Edgeless graph on an explicit vertex set.
  static Graph on_vertices(const std::vector<int>& verts);

  bool has_vertex(int u) const { return adj_.count(u) != 0; }
  bool has_edge(int u, int v) const;
  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const;
  bool empty() const { return adj_.empty(); }
  std::vector<int> vertices() const;                 // ascending
  const std::vector<int>& neighbors(int u) const;    // ascending
  int degree(int u) const { return static_cast<int>(neighbors(u).size()); }
  std::vector<std::pair<int, int>> edges() const;    // u < v, lexicographic

  Graph with_vertex(int u) const;
  Graph with_edge(int u, int v) const;               // adds endpoints if absent
  Graph with_clique(const std::vector<int>& c) const;
  Graph remove_vertex(int u) const;
  Graph remove_vertices(const std::vector<int>& xs) const;
  Graph remove_edge(int u, int v) const;
  Graph induced(const std::vector<int>& keep) const;
  // Contract a set of vertices (not necessarily connected here; callers that
  // care about minor semantics pass connected sets) into the single vertex
  // `rep`, which must belong to the set. Loops and multi-edges collapse.
  Graph contract_set(const std::vector<int>& xs, int rep) const;

  bool operator==(const Graph&) const = default;
  bool operator<(const Graph& o) const { return adj_ < o.adj_; }

 private:
  std::map<int, std::vector<int>> adj_;  // key set = vertices; lists sorted
  void add_edge_raw(int u, int v);
};

// A path as an ordered sequence of distinct vertices. Helpers below interpret
// it against a carrier graph.
using PathSeq = std::vector<int>;

bool is_valid_path(const Graph& g, const PathSeq& p);

// Ordered sequence V_0..V_l of disjoint nonempty sets covering V(G) such that
// every edge joins consecutive-or-equal classes.
struct PathPartition {
  std::vector<std::vector<int>> classes;
};
bool is_valid_path_partition(const Graph& g, const PathPartition& pp);

// --- elementary structure ---------------------------------------------------

std::vector<std::vector<int>> connected_components(const Graph& g);  // sorted
bool is_connected(const Graph& g);
// Component of u in g (u must be a vertex).
std::vector<int> component_of(const Graph& g, int u);
// True iff `set` is nonempty and connected in g.
bool is_connected_set(const Graph& g, const std::vector<int>& set);
// N_G(U): neighbors of the set, excluding the set itself.
std::vector<int> set_neighborhood(const Graph& g, const std::vector<int>& set);
// Blocks: maximal 2-connected subgraphs, bridges, isolated vertices (as
// vertex sets).
std::vector<std::vector<int>> blocks(const Graph& g);
// Projection of u on X: {u} if u is in X, else N_G(C) for C the component of
// u in G-X.
std::vector<int> vertex_projection(const Graph& g, const std::vector<int>& x_set, int u);
std::vector<int> vertex_projection_set(const Graph& g, const std::vector<int>& x_set,
                                       const std::vector<int>& a_set);

// --- generators -------------------------------------------------------------

Graph path_graph(int l);      // vertices 0..l-1 in path order; l >= 1
Graph cycle_graph(int l);     // l >= 3
Graph complete_graph(int n);
// Vertex (u1,u2) gets identity pos(u1)*|V2| + pos(u2) where pos is the rank
// in the ascending vertex order of the factor.
Graph cartesian_product(const Graph& g1, const Graph& g2);
Graph grid_graph(int k, int l);  // path_graph(k) x path_graph(l)

// All labelled trees on {0..k-1} in Prufer-sequence order; k <= 8.
std::vector<Graph> enumerate_labelled_trees(int k);
Graph tree_from_prufer(const std::vector<int>& seq, int k);
// Unlabelled trees (one representative per isomorphism class), by leaf
// augmentation; usable beyond the Prufer cap.
std::vector<Graph> enumerate_trees_up_to_iso(int n);

// --- small utilities --------------------------------------------------------

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b);
bool sorted_contains(const std::vector<int>& a, int x);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);  // a subset of b

}  // namespace kladder

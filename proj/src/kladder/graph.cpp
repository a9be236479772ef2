#include "kladder/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "kladder/canon.hpp"
#include "kladder/errors.hpp"

namespace kladder {

void Graph::add_edge_raw(int u, int v) {
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) au.insert(it, v);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  for (int i = 0; i < n; i++) g.adj_[i];
  for (auto [u, v] : edges) {
    if (u == v) throw ValidationError("self-loop rejected");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ValidationError("edge endpoint outside 0..n-1");
    g.add_edge_raw(u, v);
    g.add_edge_raw(v, u);
  }
  return g;
}

Graph Graph::on_vertices(const std::vector<int>& verts) {
  Graph g;
  for (int u : verts) {
    if (u < 0) throw ValidationError("negative vertex identity");
    g.adj_[u];
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

int Graph::num_edges() const {
  int d = 0;
  for (auto& [u, nb] : adj_) d += static_cast<int>(nb.size());
  return d / 2;
}

std::vector<int> Graph::vertices() const {
  std::vector<int> vs;
  vs.reserve(adj_.size());
  for (auto& [u, nb] : adj_) vs.push_back(u);
  return vs;
}

const std::vector<int>& Graph::neighbors(int u) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) throw ValidationError("neighbors: no such vertex");
  return it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (auto& [u, nb] : adj_)
    for (int v : nb)
      if (u < v) es.emplace_back(u, v);
  return es;
}

Graph Graph::with_vertex(int u) const {
  if (u < 0) throw ValidationError("negative vertex identity");
  Graph g = *this;
  g.adj_[u];
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v) throw ValidationError("self-loop rejected");
  Graph g = *this;
  g.adj_[u];
  g.adj_[v];
  g.add_edge_raw(u, v);
  g.add_edge_raw(v, u);
  return g;
}

Graph Graph::with_clique(const std::vector<int>& c) const {
  Graph g = *this;
  for (int u : c) g.adj_[u];
  for (size_t i = 0; i < c.size(); i++)
    for (size_t j = i + 1; j < c.size(); j++) {
      if (c[i] == c[j]) continue;
      g.add_edge_raw(c[i], c[j]);
      g.add_edge_raw(c[j], c[i]);
    }
  return g;
}

Graph Graph::remove_vertex(int u) const { return remove_vertices({u}); }

Graph Graph::remove_vertices(const std::vector<int>& xs) const {
  std::set<int> drop(xs.begin(), xs.end());
  Graph g;
  for (auto& [u, nb] : adj_) {
    if (drop.count(u)) continue;
    auto& out = g.adj_[u];
    for (int v : nb)
      if (!drop.count(v)) out.push_back(v);
  }
  return g;
}

Graph Graph::remove_edge(int u, int v) const {
  Graph g = *this;
  auto strip = [&](int a, int b) {
    auto it = g.adj_.find(a);
    if (it == g.adj_.end()) return;
    auto& nb = it->second;
    auto p = std::lower_bound(nb.begin(), nb.end(), b);
    if (p != nb.end() && *p == b) nb.erase(p);
  };
  strip(u, v);
  strip(v, u);
  return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::set<int> ks(keep.begin(), keep.end());
  Graph g;
  for (int u : keep) {
    if (!has_vertex(u)) throw ValidationError("induced: no such vertex");
    auto& out = g.adj_[u];
    for (int v : neighbors(u))
      if (ks.count(v)) out.push_back(v);
  }
  return g;
}

Graph Graph::contract_set(const std::vector<int>& xs, int rep) const {
  if (std::find(xs.begin(), xs.end(), rep) == xs.end())
    throw ValidationError("contract_set: representative not in set");
  std::set<int> drop(xs.begin(), xs.end());
  drop.erase(rep);
  Graph g;
  g.adj_[rep];
  for (auto& [u, nb] : adj_) {
    int uu = drop.count(u) ? rep : u;
    g.adj_[uu];
    for (int v : nb) {
      int vv = drop.count(v) ? rep : v;
      if (uu != vv) g.add_edge_raw(uu, vv);
    }
  }
  return g;
}

bool is_valid_path(const Graph& g, const PathSeq& p) {
  std::set<int> seen;
  for (size_t i = 0; i < p.size(); i++) {
    if (!g.has_vertex(p[i])) return false;
    if (!seen.insert(p[i]).second) return false;
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
  }
  return true;
}

bool is_valid_path_partition(const Graph& g, const PathPartition& pp) {
  std::map<int, int> cls;
  for (size_t i = 0; i < pp.classes.size(); i++) {
    if (pp.classes[i].empty()) return false;
    for (int u : pp.classes[i]) {
      if (!g.has_vertex(u)) return false;
      if (cls.count(u)) return false;
      cls[u] = static_cast<int>(i);
    }
  }
  if (static_cast<int>(cls.size()) != g.num_vertices()) return false;
  for (auto [u, v] : g.edges())
    if (std::abs(cls[u] - cls[v]) > 1) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::set<int> todo;
  for (int u : g.vertices()) todo.insert(u);
  std::vector<std::vector<int>> comps;
  while (!todo.empty()) {
    int s = *todo.begin();
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    todo.erase(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (todo.erase(v)) q.push(v);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.empty() || connected_components(g).size() == 1;
}

std::vector<int> component_of(const Graph& g, int u) {
  for (auto& c : connected_components(g))
    if (std::binary_search(c.begin(), c.end(), u)) return c;
  throw ValidationError("component_of: no such vertex");
}

bool is_connected_set(const Graph& g, const std::vector<int>& set) {
  if (set.empty()) return false;
  return is_connected(g.induced(set));
}

std::vector<int> set_neighborhood(const Graph& g, const std::vector<int>& set) {
  std::set<int> in(set.begin(), set.end()), out;
  for (int u : set)
    for (int v : g.neighbors(u))
      if (!in.count(v)) out.insert(v);
  return {out.begin(), out.end()};
}

// Hopcroft-Tarjan: DFS with an edge stack; each popped batch is a block.
namespace {
struct BlockDfs {
  const Graph& g;
  std::map<int, int> num, low;
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<int>> out;
  int counter = 0;

  explicit BlockDfs(const Graph& gg) : g(gg) {}

  void visit(int u, int parent) {
    num[u] = low[u] = counter++;
    for (int v : g.neighbors(u)) {
      if (v == parent) continue;
      if (!num.count(v)) {
        estack.emplace_back(u, v);
        visit(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          std::set<int> verts;
          while (true) {
            auto [a, b] = estack.back();
            estack.pop_back();
            verts.insert(a);
            verts.insert(b);
            if (a == u && b == v) break;
          }
          out.emplace_back(verts.begin(), verts.end());
        }
      } else if (num[v] < num[u]) {
        estack.emplace_back(u, v);
        low[u] = std::min(low[u], num[v]);
      }
    }
  }
};
}  // namespace

std::vector<std::vector<int>> blocks(const Graph& g) {
  BlockDfs dfs(g);
  for (int root : g.vertices()) {
    if (dfs.num.count(root)) continue;
    if (g.neighbors(root).empty()) {
      dfs.num[root] = dfs.counter++;
      dfs.out.push_back({root});  // isolated vertex is its own block
      continue;
    }
    dfs.visit(root, -1);
  }
  std::sort(dfs.out.begin(), dfs.out.end());
  return dfs.out;
}

std::vector<int> vertex_projection(const Graph& g, const std::vector<int>& x_set, int u) {
  if (!g.has_vertex(u)) throw ValidationError("vertex_projection: no such vertex");
  if (std::find(x_set.begin(), x_set.end(), u) != x_set.end()) return {u};
  std::vector<int> xs(x_set);
  std::sort(xs.begin(), xs.end());
  Graph h = g.remove_vertices(xs);
  return set_neighborhood(g, component_of(h, u));
}

std::vector<int> vertex_projection_set(const Graph& g, const std::vector<int>& x_set,
                                       const std::vector<int>& a_set) {
  std::set<int> acc;
  for (int u : a_set) {
    auto p = vertex_projection(g, x_set, u);
    acc.insert(p.begin(), p.end());
  }
  return {acc.begin(), acc.end()};
}

Graph path_graph(int l) {
  if (l < 1) throw ValidationError("path_graph: length must be >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < l; i++) es.emplace_back(i, i + 1);
  return Graph::from_edges(l, es);
}

Graph cycle_graph(int l) {
  if (l < 3) throw ValidationError("cycle_graph: length must be >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < l; i++) es.emplace_back(i, (i + 1) % l);
  return Graph::from_edges(l, es);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  auto v1 = g1.vertices(), v2 = g2.vertices();
  int n2 = static_cast<int>(v2.size());
  std::map<int, int> pos1, pos2;
  for (size_t i = 0; i < v1.size(); i++) pos1[v1[i]] = static_cast<int>(i);
  for (size_t i = 0; i < v2.size(); i++) pos2[v2[i]] = static_cast<int>(i);
  auto id = [&](int a, int b) { return pos1[a] * n2 + pos2[b]; };
  std::vector<std::pair<int, int>> es;
  for (int a : v1)
    for (int b : v2) {
      for (int b2 : g2.neighbors(b))
        if (pos2[b2] > pos2[b]) es.emplace_back(id(a, b), id(a, b2));
      for (int a2 : g1.neighbors(a))
        if (pos1[a2] > pos1[a]) es.emplace_back(id(a, b), id(a2, b));
    }
  return Graph::from_edges(static_cast<int>(v1.size()) * n2, es);
}

Graph grid_graph(int k, int l) { return cartesian_product(path_graph(k), path_graph(l)); }

Graph tree_from_prufer(const std::vector<int>& seq, int k) {
  if (k == 1) return Graph::on_vertices({0});
  if (static_cast<int>(seq.size()) != k - 2)
    throw ValidationError("tree_from_prufer: bad sequence length");
  std::vector<int> deg(k, 1);
  for (int x : seq) deg[x]++;
  std::vector<std::pair<int, int>> es;
  std::set<int> leaves;
  for (int i = 0; i < k; i++)
    if (deg[i] == 1) leaves.insert(i);
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  es.emplace_back(a, b);
  return Graph::from_edges(k, es);
}

std::vector<Graph> enumerate_labelled_trees(int k) {
  if (k < 1) throw ValidationError("enumerate_labelled_trees: k must be >= 1");
  check_size(k, 8, "enumerate_labelled_trees");
  if (k == 1) return {Graph::on_vertices({0})};
  if (k == 2) return {path_graph(2)};
  std::vector<Graph> out;
  std::vector<int> seq(k - 2, 0);
  while (true) {
    out.push_back(tree_from_prufer(seq, k));
    int i = k - 3;
    while (i >= 0 && seq[i] == k - 1) seq[i--] = 0;
    if (i < 0) break;
    seq[i]++;
  }
  return out;
}

std::vector<Graph> enumerate_trees_up_to_iso(int n) {
  if (n < 1) throw ValidationError("enumerate_trees_up_to_iso: n must be >= 1");
  std::vector<Graph> cur{Graph::on_vertices({0})};
  for (int sz = 2; sz <= n; sz++) {
    std::map<std::string, Graph> next;
    for (const Graph& t : cur)
      for (int u : t.vertices()) {
        Graph t2 = t.with_edge(u, sz - 1);
        next.emplace(canonical_form(t2), t2);
      }
    cur.clear();
    for (auto& [key, t] : next) cur.push_back(t);
  }
  return cur;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool sorted_contains(const std::vector<int>& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace kladder

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "kladder/canon.hpp"

namespace kladder::testing {

const std::vector<Graph>& graphs_up_to_iso(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 0) {
    out.push_back(Graph());
  } else {
    const std::vector<Graph>& prev = graphs_up_to_iso(n - 1);
    std::set<std::string> seen;
    int v = n - 1;
    for (const Graph& h : prev) {
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Graph g = h.with_vertex(v);
        for (int u = 0; u < n - 1; ++u)
          if (mask & (1u << u)) g = g.with_edge(u, v);
        if (seen.insert(canonical_form(g)).second) out.push_back(g);
      }
    }
  }
  return cache.emplace(n, std::move(out)).first->second;
}

int brute_vertex_cover(const Graph& g) {
  std::vector<int> verts = g.vertices();
  int n = static_cast<int>(verts.size());
  if (n > 20) throw std::logic_error("brute_vertex_cover: too large");
  auto edges = g.edges();
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::set<int> in;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) in.insert(verts[i]);
    bool covers = true;
    for (auto [u, v] : edges)
      if (!in.count(u) && !in.count(v)) {
        covers = false;
        break;
      }
    if (covers) best = size;
  }
  return best;
}

bool is_forest(const Graph& g) {
  return g.num_edges() ==
         g.num_vertices() - static_cast<int>(connected_components(g).size());
}

int brute_feedback_vertex_set(const Graph& g) {
  std::vector<int> verts = g.vertices();
  int n = static_cast<int>(verts.size());
  if (n > 20) throw std::logic_error("brute_feedback_vertex_set: too large");
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<int> drop;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) drop.push_back(verts[i]);
    if (is_forest(g.remove_vertices(drop))) best = size;
  }
  return best;
}

int max_component_size(const Graph& g) {
  int best = 0;
  for (const auto& c : connected_components(g))
    best = std::max(best, static_cast<int>(c.size()));
  return best;
}

int max_block_size(const Graph& g) {
  int best = 0;
  for (const auto& b : blocks(g)) best = std::max(best, static_cast<int>(b.size()));
  return best;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<int> verts;
  for (int i = 0; i < n; ++i) verts.push_back(i);
  Graph g = Graph::on_vertices(verts);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g = g.with_edge(u, v);
  return g;
}

Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<int> verts;
  for (int i = 0; i < n; ++i) verts.push_back(i);
  Graph g = Graph::on_vertices(verts);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g = g.with_edge(pick(rng), v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng)) g = g.with_edge(u, v);
  return g;
}

Graph random_minor(std::mt19937& rng, const Graph& g, int ops) {
  Graph h = g;
  std::uniform_int_distribution<int> op(0, 2);
  for (int step = 0; step < ops; ++step) {
    std::vector<int> verts = h.vertices();
    auto edges = h.edges();
    switch (op(rng)) {
      case 0: {
        if (verts.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, verts.size() - 1);
        h = h.remove_vertex(verts[pick(rng)]);
        break;
      }
      case 1: {
        if (edges.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
        auto [u, v] = edges[pick(rng)];
        h = h.remove_edge(u, v);
        break;
      }
      default: {
        if (edges.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
        auto [u, v] = edges[pick(rng)];
        h = h.contract_set({u, v}, u);
        break;
      }
    }
  }
  return h;
}

}  // namespace kladder::testing

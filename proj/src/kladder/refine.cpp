#include "kladder/refine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "kladder/errors.hpp"
#include "kladder/menger.hpp"

namespace kladder {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

std::vector<int> tree_path(const Graph& tree, int from, int to) {
  std::map<int, int> par;
  std::queue<int> q;
  par[from] = from;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == to) break;
    for (int v : tree.neighbors(u))
      if (!par.count(v)) {
        par[v] = u;
        q.push(v);
      }
  }
  if (!par.count(to)) throw std::logic_error("tree_path: nodes not connected");
  std::vector<int> p{to};
  while (p.back() != from) p.push_back(par[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

std::map<int, int> dist_to_set(const Graph& tree, const std::vector<int>& srcs) {
  std::map<int, int> dist;
  std::queue<int> q;
  for (int s : srcs)
    if (!dist.count(s)) {
      dist[s] = 0;
      q.push(s);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : tree.neighbors(u))
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

// Size-r subsets of a sorted base in lexicographic order; stops early when f
// returns true, and reports whether it did.
bool scan_subsets(const std::vector<int>& base, int r,
                  const std::function<bool(const std::vector<int>&)>& f) {
  int n = static_cast<int>(base.size());
  if (r > n || r < 0) return false;
  std::vector<int> idx(r);
  for (int j = 0; j < r; ++j) idx[j] = j;
  while (true) {
    std::vector<int> sub(r);
    for (int j = 0; j < r; ++j) sub[j] = base[idx[j]];
    if (f(sub)) return true;
    int j = r - 1;
    while (j >= 0 && idx[j] == n - r + j) --j;
    if (j < 0) return false;
    ++idx[j];
    for (int m = j + 1; m < r; ++m) idx[m] = idx[m - 1] + 1;
  }
}

int adhesion_of(const TreeDecomposition& d, int p, int q) {
  return static_cast<int>(sorted_intersection(d.bag(p), d.bag(q)).size());
}

using FlowMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, int>;

int cached_flow(FlowMemo& memo, const Graph& g, const std::vector<int>& a,
                const std::vector<int>& b) {
  auto key = std::make_pair(a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int v = max_disjoint_paths(g, a, b).count;
  memo.emplace(std::move(key), v);
  return v;
}

}  // namespace

std::vector<long long> bag_census(const TreeDecomposition& d, int n) {
  std::vector<long long> c(n + 1, 0);
  for (const auto& [x, w] : d.bags) {
    (void)x;
    c.at(w.size())++;
  }
  return c;
}

std::vector<long long> bag_census_filtered(const TreeDecomposition& d, int n, int k) {
  std::vector<long long> c(n + 1, 0);
  for (const auto& [x, w] : d.bags) {
    int sz = static_cast<int>(w.size());
    bool counted = 2 * sz > 3 * (k - 1);
    if (!counted)
      for (int y : d.tree.neighbors(x))
        if (adhesion_of(d, x, y) >= k) {
          counted = true;
          break;
        }
    if (counted) c.at(sz)++;
  }
  return c;
}

int census_compare(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.size() != b.size()) throw std::logic_error("census_compare: length mismatch");
  for (size_t j = a.size(); j-- > 0;) {
    if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
  }
  return 0;
}

ImprovementResult improvement_step(const Graph& g, const std::vector<int>& s,
                                   const TreeDecomposition& d, int x1, int x2,
                                   std::vector<int> z1, std::vector<int> z2) {
  if (s.empty()) throw ValidationError("improve: empty anchor set");
  if (auto r = validate_gs_decomposition(g, s, d)) throw ValidationError("improve: " + *r);
  const int i = static_cast<int>(z1.size());
  if (i == 0 || z2.size() != z1.size())
    throw ValidationError("improve: Z1, Z2 must be nonempty of equal size");
  if (!is_subset(z1, d.bag(x1)) || !is_subset(z2, d.bag(x2)))
    throw ValidationError("improve: Z1, Z2 must sit in the bags of x1, x2");
  std::vector<int> anchor_path = tree_path(d.tree, x1, x2);
  for (size_t j = 0; j + 1 < anchor_path.size(); ++j)
    if (adhesion_of(d, anchor_path[j], anchor_path[j + 1]) < i)
      throw ValidationError("improve: an adhesion between x1 and x2 is below |Z1|");
  FlowMemo memo;
  if (cached_flow(memo, g, z1, z2) >= i)
    throw ValidationError("improve: Z1 and Z2 are already linked");

  // Re-anchor on a violating pair at minimum tree distance; ties by node ids,
  // then by the subset scan order.
  if (x1 != x2) {
    struct Cand {
      int dist, y1, y2;
    };
    std::vector<Cand> cands;
    for (size_t p = 0; p < anchor_path.size(); ++p)
      for (size_t q = 0; q < anchor_path.size(); ++q)
        cands.push_back({std::abs(static_cast<int>(p) - static_cast<int>(q)),
                         anchor_path[p], anchor_path[q]});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return std::tie(a.dist, a.y1, a.y2) < std::tie(b.dist, b.y1, b.y2);
    });
    bool found = false;
    for (const Cand& c : cands) {
      scan_subsets(d.bag(c.y1), i, [&](const std::vector<int>& za) {
        return scan_subsets(d.bag(c.y2), i, [&](const std::vector<int>& zb) {
          if (cached_flow(memo, g, za, zb) >= i) return false;
          x1 = c.y1;
          x2 = c.y2;
          z1 = za;
          z2 = zb;
          found = true;
          return true;
        });
      });
      if (found) break;
    }
    if (!found) throw std::logic_error("improve: lost the violating pair");
    anchor_path = tree_path(d.tree, x1, x2);
  }

  // Nearest legal host node per vertex: a bag containing the vertex for
  // anchored vertices, a bag covering its component's neighborhood otherwise.
  std::map<int, int> dpath = dist_to_set(d.tree, anchor_path);
  std::vector<int> nodes = d.tree.vertices();
  auto nearer = [&](int za, int zb) {
    return zb == -1 || std::make_pair(dpath.at(za), za) < std::make_pair(dpath.at(zb), zb);
  };
  std::vector<std::vector<int>> comps = connected_components(g.remove_vertices(s));
  std::map<int, int> comp_of;
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> comp_host(comps.size(), -1);
  for (size_t c = 0; c < comps.size(); ++c) {
    std::vector<int> nb = set_neighborhood(g, comps[c]);
    for (int z : nodes)
      if (is_subset(nb, d.bag(z)) && nearer(z, comp_host[c])) comp_host[c] = z;
    if (comp_host[c] == -1) throw std::logic_error("improve: component without a host bag");
  }
  std::map<int, int> zu, du;
  for (int u : g.vertices()) {
    if (sorted_contains(s, u)) {
      int best = -1;
      for (int z : nodes)
        if (sorted_contains(d.bag(z), u) && nearer(z, best)) best = z;
      zu[u] = best;
      du[u] = dpath.at(best);
    } else {
      int h = comp_host[comp_of.at(u)];
      zu[u] = h;
      du[u] = dpath.at(h) + 1;
    }
  }

  // Minimum cut; among those, minimize total host distance, then take the
  // lexicographically least vertex list.
  int c = cached_flow(memo, g, z1, z2);
  std::vector<int> verts = g.vertices();
  std::vector<int> xcut;
  long long best_score = -1;
  scan_subsets(verts, c, [&](const std::vector<int>& cand) {
    if (!is_z_cut(g, z1, z2, cand)) return false;
    long long score = 0;
    for (int u : cand) score += du.at(u);
    if (best_score < 0 || score < best_score) {
      best_score = score;
      xcut = cand;
    }
    return false;
  });
  if (best_score < 0) throw std::logic_error("improve: no cut of the flow size");

  // Sides: the Z1-side components with the cut, and everything else.
  Graph gmx = g.remove_vertices(xcut);
  std::set<int> c1;
  for (int v : z1)
    if (!sorted_contains(xcut, v) && !c1.count(v))
      for (int w : component_of(gmx, v)) c1.insert(w);
  std::vector<int> v1(c1.begin(), c1.end());
  v1 = sorted_union(v1, xcut);
  std::vector<int> v2;
  for (int v : verts)
    if (!c1.count(v)) v2.push_back(v);

  // Each copy keeps its side of the graph; a cut vertex additionally rides
  // along the tree path from its host toward the opposite anchor.
  std::map<int, std::set<int>> onpath1, onpath2;
  for (int u : xcut) {
    for (int z : tree_path(d.tree, zu.at(u), x2)) onpath1[u].insert(z);
    for (int z : tree_path(d.tree, zu.at(u), x1)) onpath2[u].insert(z);
  }
  int m0 = nodes.back() + 1;
  TreeDecomposition nd;
  std::vector<int> all_nodes;
  for (int z : nodes) {
    all_nodes.push_back(z);
    all_nodes.push_back(z + m0);
  }
  std::sort(all_nodes.begin(), all_nodes.end());
  nd.tree = Graph::on_vertices(all_nodes);
  for (auto [p, q] : d.tree.edges()) {
    nd.tree = nd.tree.with_edge(p, q);
    nd.tree = nd.tree.with_edge(p + m0, q + m0);
  }
  nd.tree = nd.tree.with_edge(x1 + m0, x2);
  for (int z : nodes) {
    std::vector<int> b1 = sorted_intersection(d.bag(z), v1);
    std::vector<int> b2 = sorted_intersection(d.bag(z), v2);
    for (int u : xcut) {
      if (onpath1.at(u).count(z)) b1 = sorted_union(b1, {u});
      if (onpath2.at(u).count(z)) b2 = sorted_union(b2, {u});
    }
    nd.bags[z] = b1;
    nd.bags[z + m0] = b2;
  }

  ImprovementResult res;
  res.s_new = sorted_union(s, xcut);
  res.d = nd;
  int n = g.num_vertices();
  if (auto r = validate_gs_decomposition(g, res.s_new, nd))
    throw std::logic_error("improve: invalid result: " + *r);
  if (census_compare(bag_census(nd, n), bag_census(d, n)) >= 0)
    throw std::logic_error("improve: census did not decrease");
  if (x1 == x2) {
    res.z1 = x1;
    res.z2 = x1 + m0;
    if (!is_subset(z1, nd.bag(res.z1)) || !is_subset(z2, nd.bag(res.z2)))
      throw std::logic_error("improve: anchor sets left their bags");
    if (sorted_intersection(nd.bag(res.z1), nd.bag(res.z2)) != xcut)
      throw std::logic_error("improve: bridge adhesion is not the cut");
  }
  return res;
}

TreeDecomposition unbreakable_decomposition(const Graph& g, int k,
                                            std::vector<RefineTrace>* trace) {
  if (k < 1) throw ValidationError("unbreakable: k must be positive");
  check_size(g.num_vertices(), 12, "unbreakable decomposition");
  std::vector<int> verts = g.vertices();
  TreeDecomposition d = TreeDecomposition::single_bag(verts);
  if (g.empty()) return d;
  int n = g.num_vertices();
  FlowMemo memo;
  bool gconn = is_connected(g);
  while (true) {
    bool acted = false;
    // Unlinked equal-size subsets of one bag.
    for (int i = 1; i <= k && !acted; ++i)
      for (int x : d.tree.vertices()) {
        if (acted) break;
        std::vector<int> w = d.bag(x);
        scan_subsets(w, i, [&](const std::vector<int>& za) {
          return scan_subsets(w, i, [&](const std::vector<int>& zb) {
            if (cached_flow(memo, g, za, zb) >= i) return false;
            auto before = bag_census(d, n);
            ImprovementResult res = improvement_step(g, verts, d, x, x, za, zb);
            d = res.d;
            auto after = bag_census(d, n);
            if (census_compare(after, before) >= 0)
              throw std::logic_error("unbreakable: census did not decrease");
            if (trace)
              trace->push_back({"unlinked bag subsets Z1=" + join(za) + " Z2=" + join(zb),
                                before, after});
            acted = true;
            return true;
          });
        });
      }
    if (acted) continue;
    // Disconnected far side of a tree edge (connected graphs only).
    if (gconn) {
      std::vector<std::pair<int, int>> dir_edges;
      for (auto [p, q] : d.tree.edges()) {
        dir_edges.emplace_back(p, q);
        dir_edges.emplace_back(q, p);
      }
      std::sort(dir_edges.begin(), dir_edges.end());
      for (auto [x1, x2] : dir_edges) {
        TreeDecomposition far = split_side(d, x2, x1);
        std::vector<int> uside;
        for (int z : far.tree.vertices()) uside = sorted_union(uside, far.bag(z));
        if (uside.empty()) continue;
        Graph gu = g.induced(uside);
        if (is_connected(gu)) continue;
        auto comps = connected_components(gu);
        std::set<int> side1(comps[0].begin(), comps[0].end());
        TreeDecomposition keep = split_side(d, x1, x2);
        int m0 = d.tree.vertices().back() + 1;
        auto before = bag_census(d, n);
        TreeDecomposition nd;
        std::vector<int> all_nodes = keep.tree.vertices();
        for (int z : far.tree.vertices()) {
          all_nodes.push_back(z + m0);
          all_nodes.push_back(z + 2 * m0);
        }
        std::sort(all_nodes.begin(), all_nodes.end());
        nd.tree = Graph::on_vertices(all_nodes);
        for (auto [p, q] : keep.tree.edges()) nd.tree = nd.tree.with_edge(p, q);
        for (auto [p, q] : far.tree.edges()) {
          nd.tree = nd.tree.with_edge(p + m0, q + m0);
          nd.tree = nd.tree.with_edge(p + 2 * m0, q + 2 * m0);
        }
        nd.tree = nd.tree.with_edge(x1, x2 + m0);
        nd.tree = nd.tree.with_edge(x1, x2 + 2 * m0);
        for (int z : keep.tree.vertices()) nd.bags[z] = keep.bag(z);
        for (int z : far.tree.vertices()) {
          std::vector<int> b1, b2;
          for (int v : far.bag(z)) (side1.count(v) ? b1 : b2).push_back(v);
          nd.bags[z + m0] = b1;
          nd.bags[z + 2 * m0] = b2;
        }
        if (auto r = validate_gs_decomposition(g, verts, nd))
          throw std::logic_error("unbreakable: invalid split: " + *r);
        auto after = bag_census(nd, n);
        if (census_compare(after, before) >= 0)
          throw std::logic_error("unbreakable: census did not decrease");
        if (trace)
          trace->push_back({"disconnected far side of edge " + std::to_string(x1) + "-" +
                                std::to_string(x2),
                            before, after});
        d = nd;
        acted = true;
        break;
      }
    }
    if (!acted) break;
  }
  if (auto r = verify_unbreakable(g, k, d)) throw std::logic_error("unbreakable: " + *r);
  return d;
}

Report verify_unbreakable(const Graph& g, int k, const TreeDecomposition& d) {
  if (auto r = validate_tree_decomposition(g, d)) return r;
  if (d.adhesion() > k - 1) return std::string("adhesion exceeds k-1");
  FlowMemo memo;
  for (int i = 1; i <= k; ++i)
    for (int x : d.tree.vertices()) {
      Report bad;
      scan_subsets(d.bag(x), i, [&](const std::vector<int>& za) {
        return scan_subsets(d.bag(x), i, [&](const std::vector<int>& zb) {
          if (cached_flow(memo, g, za, zb) >= i) return false;
          bad = "bag " + std::to_string(x) + ": subsets Z1=" + join(za) +
                " Z2=" + join(zb) + " are not linked";
          return true;
        });
      });
      if (bad) return bad;
    }
  if (is_connected(g))
    for (auto [p, q] : d.tree.edges())
      for (auto [x1, x2] : {std::make_pair(p, q), std::make_pair(q, p)}) {
        TreeDecomposition far = split_side(d, x2, x1);
        std::vector<int> uside;
        for (int z : far.tree.vertices()) uside = sorted_union(uside, far.bag(z));
        if (!uside.empty() && !is_connected(g.induced(uside)))
          return "far side of edge " + std::to_string(x1) + "-" + std::to_string(x2) +
                 " induces a disconnected subgraph";
      }
  return std::nullopt;
}

namespace {

// Far side of the edge x1x2 (seen from x1), extended by the hosted loose
// components, with the edges inside the x1x2 adhesion removed.
Graph far_side_graph(const Graph& g, const std::vector<int>& sp,
                     const TreeDecomposition& d, int x1, int x2) {
  TreeDecomposition far = split_side(d, x2, x1);
  std::vector<int> a_set = sorted_intersection(d.bag(x1), d.bag(x2));
  std::vector<int> v0;
  for (int z : far.tree.vertices()) v0 = sorted_union(v0, far.bag(z));
  for (const auto& comp : connected_components(g.remove_vertices(sp))) {
    std::vector<int> nb = set_neighborhood(g, comp);
    if (is_subset(nb, a_set)) continue;
    for (int z : far.tree.vertices())
      if (is_subset(nb, far.bag(z))) {
        v0 = sorted_union(v0, comp);
        break;
      }
  }
  Graph g0 = g.induced(v0);
  for (size_t i = 0; i < a_set.size(); ++i)
    for (size_t j = i + 1; j < a_set.size(); ++j)
      if (g0.has_edge(a_set[i], a_set[j])) g0 = g0.remove_edge(a_set[i], a_set[j]);
  return g0;
}

}  // namespace

std::pair<std::vector<int>, TreeDecomposition> good_gs_decomposition(
    const Graph& g, const std::vector<int>& s, int k, int a, int t,
    std::vector<RefineTrace>* trace, const TreeDecomposition* initial) {
  if (k < 1 || a < k || t < 1)
    throw ValidationError("good decomposition: need k >= 1, a >= k, t >= 1");
  check_size(g.num_vertices(), 12, "good decomposition");
  if (s.empty()) throw ValidationError("good decomposition: empty anchor set");
  TreeDecomposition d;
  if (initial) {
    d = *initial;
    if (auto r = validate_gs_decomposition(g, s, d))
      throw ValidationError("good decomposition: initial: " + *r);
    if (d.width() >= t) throw ValidationError("good decomposition: initial width too large");
    if (d.adhesion() > a)
      throw ValidationError("good decomposition: initial adhesion too large");
  } else {
    if (static_cast<int>(s.size()) > t)
      throw ValidationError(
          "good decomposition: |S| exceeds t; supply an initial decomposition");
    d = TreeDecomposition::single_bag(s);
  }
  std::vector<int> sp = s;
  int n = g.num_vertices();
  FlowMemo memo;
  auto kcensus = [&](const TreeDecomposition& dd) { return bag_census_filtered(dd, n, k); };

  while (true) {
    bool acted = false;
    // Unlinked size-k subsets of two bags joined by large adhesions only.
    std::vector<int> tnodes = d.tree.vertices();
    for (size_t p = 0; p < tnodes.size() && !acted; ++p)
      for (size_t q = p; q < tnodes.size() && !acted; ++q) {
        int x1 = tnodes[p], x2 = tnodes[q];
        std::vector<int> pathv = tree_path(d.tree, x1, x2);
        bool adh_ok = true;
        for (size_t j = 0; j + 1 < pathv.size(); ++j)
          if (adhesion_of(d, pathv[j], pathv[j + 1]) < k) {
            adh_ok = false;
            break;
          }
        if (!adh_ok) continue;
        if (x1 == x2 && 2 * static_cast<int>(d.bag(x1).size()) <= 3 * (k - 1)) {
          bool big_adh = false;
          for (int y : d.tree.neighbors(x1))
            if (adhesion_of(d, x1, y) >= k) big_adh = true;
          if (!big_adh) continue;  // small loosely attached bag is exempt
        }
        scan_subsets(d.bag(x1), k, [&](const std::vector<int>& za) {
          return scan_subsets(d.bag(x2), k, [&](const std::vector<int>& zb) {
            if (cached_flow(memo, g, za, zb) >= k) return false;
            auto before = kcensus(d);
            ImprovementResult res = improvement_step(g, sp, d, x1, x2, za, zb);
            sp = res.s_new;
            d = res.d;
            auto after = kcensus(d);
            if (census_compare(after, before) >= 0)
              throw std::logic_error("good decomposition: filtered census did not decrease");
            if (trace)
              trace->push_back({"unlinked bag subsets x1=" + std::to_string(x1) +
                                    " x2=" + std::to_string(x2) + " Z1=" + join(za) +
                                    " Z2=" + join(zb),
                                before, after});
            acted = true;
            return true;
          });
        });
      }
    if (acted) continue;

    // Small adhesion under a large one whose far side is not fully linked.
    std::vector<std::pair<int, int>> dir_edges;
    for (auto [p, q] : d.tree.edges()) {
      dir_edges.emplace_back(p, q);
      dir_edges.emplace_back(q, p);
    }
    std::sort(dir_edges.begin(), dir_edges.end());
    for (auto [x1, x2] : dir_edges) {
      if (acted) break;
      std::vector<int> a_set = sorted_intersection(d.bag(x1), d.bag(x2));
      int asz = static_cast<int>(a_set.size());
      if (asz == 0 || asz >= k) continue;
      bool big_adh = false;
      for (int x3 : d.tree.neighbors(x2))
        if (adhesion_of(d, x2, x3) >= k) big_adh = true;
      if (!big_adh) continue;
      Graph g0 = far_side_graph(g, sp, d, x1, x2);
      // Maximal splits Z1 u Z2 = adhesion; padding reduces the general pair
      // to these.
      std::vector<int> asg(asz, 0);
      bool done = false;
      while (!done && !acted) {
        std::vector<int> za, zb;
        for (int j = 0; j < asz; ++j) {
          if (asg[j] != 1) za.push_back(a_set[j]);
          if (asg[j] != 0) zb.push_back(a_set[j]);
        }
        if (!za.empty() && za.size() == zb.size() &&
            max_disjoint_paths(g0, za, zb).count < static_cast<int>(za.size())) {
          auto before = kcensus(d);
          std::vector<int> g0v = g0.vertices();
          std::vector<int> s0 = sorted_intersection(g0v, sp);
          TreeDecomposition d0 = split_side(d, x2, x1);
          ImprovementResult res = improvement_step(g0, s0, d0, x2, x2, za, zb);
          // Subdivide the bridge with a small glue bag carrying the adhesion
          // and the cut.
          std::vector<int> cut = sorted_intersection(res.d.bag(res.z1), res.d.bag(res.z2));
          std::vector<int> z0bag = sorted_union(a_set, cut);
          TreeDecomposition keep = split_side(d, x1, x2);
          int off = keep.tree.vertices().back() + 1;
          int z0 = off + res.d.tree.vertices().back() + 1;
          TreeDecomposition nd;
          std::vector<int> all_nodes = keep.tree.vertices();
          for (int z : res.d.tree.vertices()) all_nodes.push_back(z + off);
          all_nodes.push_back(z0);
          std::sort(all_nodes.begin(), all_nodes.end());
          nd.tree = Graph::on_vertices(all_nodes);
          for (auto [pp, qq] : keep.tree.edges()) nd.tree = nd.tree.with_edge(pp, qq);
          for (auto [pp, qq] : res.d.tree.edges()) {
            if ((pp == res.z1 && qq == res.z2) || (pp == res.z2 && qq == res.z1)) continue;
            nd.tree = nd.tree.with_edge(pp + off, qq + off);
          }
          nd.tree = nd.tree.with_edge(res.z1 + off, z0);
          nd.tree = nd.tree.with_edge(z0, res.z2 + off);
          nd.tree = nd.tree.with_edge(x1, z0);
          for (int z : keep.tree.vertices()) nd.bags[z] = keep.bag(z);
          for (int z : res.d.tree.vertices()) nd.bags[z + off] = res.d.bag(z);
          nd.bags[z0] = z0bag;
          std::vector<int> snew = sorted_union(sorted_difference(sp, g0v), res.s_new);
          if (auto r = validate_gs_decomposition(g, snew, nd))
            throw std::logic_error("good decomposition: invalid reassembly: " + *r);
          auto after = kcensus(nd);
          if (census_compare(after, before) >= 0)
            throw std::logic_error("good decomposition: filtered census did not decrease");
          if (trace)
            trace->push_back({"unlinked far side of adhesion " + std::to_string(x1) + "-" +
                                  std::to_string(x2) + " Z1=" + join(za) + " Z2=" + join(zb),
                              before, after});
          sp = snew;
          d = nd;
          acted = true;
          break;
        }
        int j = 0;
        while (j < asz && asg[j] == 2) asg[j++] = 0;
        if (j == asz) done = true;
        else ++asg[j];
      }
    }
    if (!acted) break;
  }
  if (auto r = verify_good_decomposition(g, sp, k, a, t, d))
    throw std::logic_error("good decomposition: " + *r);
  return {sp, d};
}

Report verify_good_decomposition(const Graph& g, const std::vector<int>& s_prime, int k,
                                 int a, int t, const TreeDecomposition& d) {
  if (auto r = validate_gs_decomposition(g, s_prime, d)) return r;
  if (d.adhesion() > a) return std::string("adhesion exceeds a");
  int w = d.width();
  if (!(w < t || 2 * w < 3 * (k - 1))) return std::string("width bound violated");
  FlowMemo memo;
  std::vector<int> tnodes = d.tree.vertices();
  for (size_t p = 0; p < tnodes.size(); ++p)
    for (size_t q = p; q < tnodes.size(); ++q) {
      int x1 = tnodes[p], x2 = tnodes[q];
      std::vector<int> pathv = tree_path(d.tree, x1, x2);
      bool adh_ok = true;
      for (size_t j = 0; j + 1 < pathv.size(); ++j)
        if (adhesion_of(d, pathv[j], pathv[j + 1]) < k) adh_ok = false;
      if (!adh_ok) continue;
      if (x1 == x2 && 2 * static_cast<int>(d.bag(x1).size()) <= 3 * (k - 1)) {
        bool big_adh = false;
        for (int y : d.tree.neighbors(x1))
          if (adhesion_of(d, x1, y) >= k) big_adh = true;
        if (!big_adh) continue;
      }
      Report bad;
      scan_subsets(d.bag(x1), k, [&](const std::vector<int>& za) {
        return scan_subsets(d.bag(x2), k, [&](const std::vector<int>& zb) {
          if (cached_flow(memo, g, za, zb) >= k) return false;
          bad = "nodes " + std::to_string(x1) + "," + std::to_string(x2) +
                ": size-k subsets Z1=" + join(za) + " Z2=" + join(zb) + " are not linked";
          return true;
        });
      });
      if (bad) return bad;
    }
  for (auto [p, q] : d.tree.edges())
    for (auto [x1, x2] : {std::make_pair(p, q), std::make_pair(q, p)}) {
      std::vector<int> a_set = sorted_intersection(d.bag(x1), d.bag(x2));
      int asz = static_cast<int>(a_set.size());
      if (asz == 0 || asz >= k) continue;
      bool big_adh = false;
      for (int x3 : d.tree.neighbors(x2))
        if (adhesion_of(d, x2, x3) >= k) big_adh = true;
      if (!big_adh) continue;
      Graph g0 = far_side_graph(g, s_prime, d, x1, x2);
      FlowMemo memo0;
      for (int i = 1; i <= asz; ++i) {
        Report bad;
        scan_subsets(a_set, i, [&](const std::vector<int>& za) {
          return scan_subsets(a_set, i, [&](const std::vector<int>& zb) {
            if (cached_flow(memo0, g0, za, zb) >= i) return false;
            bad = "far side of adhesion " + std::to_string(x1) + "-" + std::to_string(x2) +
                  ": Z1=" + join(za) + " Z2=" + join(zb) + " are not linked";
            return true;
          });
        });
        if (bad) return bad;
      }
    }
  return std::nullopt;
}

}  // namespace kladder

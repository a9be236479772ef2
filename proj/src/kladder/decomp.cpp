#include "kladder/decomp.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "kladder/errors.hpp"
#include "kladder/params.hpp"

namespace kladder {

TreeDecomposition TreeDecomposition::single_bag(const std::vector<int>& bag) {
  TreeDecomposition d;
  d.tree = Graph::on_vertices({0});
  std::vector<int> b(bag);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  d.bags[0] = b;
  return d;
}

int TreeDecomposition::width() const {
  int w = -1;
  for (auto& [x, b] : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int TreeDecomposition::adhesion() const {
  int a = 0;
  for (auto [x, y] : tree.edges())
    a = std::max(a, static_cast<int>(sorted_intersection(bag(x), bag(y)).size()));
  return a;
}

bool TreeDecomposition::is_path() const {
  for (int x : tree.vertices())
    if (tree.degree(x) > 2) return false;
  return is_connected(tree);
}

const std::vector<int>& TreeDecomposition::bag(int x) const {
  auto it = bags.find(x);
  if (it == bags.end()) throw ValidationError("no bag for node " + std::to_string(x));
  return it->second;
}

namespace {

std::map<int, std::vector<int>> occupancy(const TreeDecomposition& d) {
  std::map<int, std::vector<int>> occ;  // vertex -> nodes containing it
  for (auto& [x, b] : d.bags)
    for (int u : b) occ[u].push_back(x);
  return occ;
}

}  // namespace

Report validate_decomposition_shape(const TreeDecomposition& d) {
  int n = d.tree.num_vertices();
  if (n == 0) return "decomposition tree is empty";
  if (d.tree.num_edges() != n - 1 || !is_connected(d.tree))
    return "decomposition tree is not a tree";
  if (static_cast<int>(d.bags.size()) != n) return "bag map does not match tree nodes";
  for (int x : d.tree.vertices())
    if (!d.bags.count(x)) return "missing bag for node " + std::to_string(x);
  for (auto& [x, b] : d.bags)
    if (!std::is_sorted(b.begin(), b.end()) ||
        std::adjacent_find(b.begin(), b.end()) != b.end())
      return "bag of node " + std::to_string(x) + " is not a sorted set";
  for (auto& [u, nodes] : occupancy(d))
    if (!is_connected_set(d.tree, nodes))
      return "vertex " + std::to_string(u) + " occupies a disconnected subtree";
  return std::nullopt;
}

Report validate_tree_decomposition(const Graph& g, const TreeDecomposition& d) {
  if (auto r = validate_decomposition_shape(d)) return r;
  auto occ = occupancy(d);
  for (int u : g.vertices())
    if (!occ.count(u)) return "vertex " + std::to_string(u) + " appears in no bag";
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (auto& [x, b] : d.bags)
      if (sorted_contains(b, u) && sorted_contains(b, v)) {
        covered = true;
        break;
      }
    if (!covered)
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " lies in no bag";
  }
  return std::nullopt;
}

Report validate_gs_decomposition(const Graph& g, const std::vector<int>& s,
                                 const TreeDecomposition& d) {
  std::vector<int> ss(s);
  std::sort(ss.begin(), ss.end());
  for (int u : ss)
    if (!g.has_vertex(u)) throw ValidationError("S is not a subset of V(G)");
  if (auto r = validate_tree_decomposition(g.induced(ss), d)) return r;
  Graph rest = g.remove_vertices(ss);
  for (auto& c : connected_components(rest)) {
    auto nb = set_neighborhood(g, c);
    bool covered = false;
    for (auto& [x, b] : d.bags)
      if (is_subset(nb, b)) {
        covered = true;
        break;
      }
    if (!covered)
      return "component containing vertex " + std::to_string(c.front()) +
             " has its neighborhood in no bag";
  }
  return std::nullopt;
}

TreeDecomposition split_side(const TreeDecomposition& d, int x, int y) {
  Graph cut = d.tree.remove_edge(x, y);
  auto side = component_of(cut, x);
  TreeDecomposition out;
  out.tree = cut.induced(side);
  for (int z : side) out.bags[z] = d.bag(z);
  return out;
}

TreeDecomposition strip_vertex(const TreeDecomposition& d, int v) {
  TreeDecomposition out;
  out.tree = d.tree;
  for (auto& [x, b] : d.bags) out.bags[x] = sorted_difference(b, {v});
  return out;
}

TreeDecomposition restrict_bags(const TreeDecomposition& d, const std::vector<int>& keep) {
  std::vector<int> ks(keep);
  std::sort(ks.begin(), ks.end());
  TreeDecomposition out;
  out.tree = d.tree;
  for (auto& [x, b] : d.bags) out.bags[x] = sorted_intersection(b, ks);
  return out;
}

// --- dismantability ---------------------------------------------------------

namespace {

std::string bag_label(const std::vector<int>& b) {
  std::string s;
  for (int u : b) {
    s += std::to_string(u);
    s.push_back(',');
  }
  return s;
}

std::string ahu_rooted(const TreeDecomposition& d, int x, int parent) {
  std::vector<std::string> kids;
  for (int y : d.tree.neighbors(x))
    if (y != parent) kids.push_back(ahu_rooted(d, y, x));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + bag_label(d.bag(x)) + "|";
  for (auto& k : kids) s += k;
  s.push_back(')');
  return s;
}

// Canonical encoding of (tree shape, bag contents): AHU from the centroid(s).
std::string decomposition_key(const TreeDecomposition& d) {
  auto vs = d.tree.vertices();
  int n = static_cast<int>(vs.size());
  if (n == 1) return ahu_rooted(d, vs[0], -1);
  // centroid(s): minimize the largest component after removal
  std::map<int, int> subtree;
  std::vector<int> centroids;
  int best = n + 1;
  for (int x : vs) {
    int worst = 0;
    Graph cut = d.tree.remove_vertex(x);
    for (auto& c : connected_components(cut))
      worst = std::max(worst, static_cast<int>(c.size()));
    if (worst < best) {
      best = worst;
      centroids = {x};
    } else if (worst == best) {
      centroids.push_back(x);
    }
  }
  std::string out;
  for (int c : centroids) {
    std::string s = ahu_rooted(d, c, -1);
    if (out.empty() || s < out) out = s;
  }
  return out;
}

std::unordered_map<std::string, bool>& dismantle_memo() {
  static std::unordered_map<std::string, bool> memo;
  return memo;
}

bool is_base(const TreeDecomposition& d) {
  return d.tree.num_vertices() == 1 && d.bags.begin()->second.empty();
}

std::vector<int> ubiquitous_vertices(const TreeDecomposition& d) {
  bool first = true;
  std::vector<int> inter;
  for (auto& [x, b] : d.bags) {
    if (first) {
      inter = b;
      first = false;
    } else {
      inter = sorted_intersection(inter, b);
    }
  }
  return inter;
}

bool dismantable(const TreeDecomposition& d, int k) {
  if (is_base(d)) return true;
  std::string key = std::to_string(k) + "#" + decomposition_key(d);
  auto& memo = dismantle_memo();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (int v : ubiquitous_vertices(d)) {
    if (dismantable(strip_vertex(d, v), k)) {
      ok = true;
      break;
    }
  }
  if (!ok) {
    for (auto [x, y] : d.tree.edges()) {
      if (static_cast<int>(sorted_intersection(d.bag(x), d.bag(y)).size()) >= k) continue;
      if (dismantable(split_side(d, x, y), k) && dismantable(split_side(d, y, x), k)) {
        ok = true;
        break;
      }
    }
  }
  if (memo.size() >= (1u << 22)) memo.clear();
  memo[key] = ok;
  return ok;
}

}  // namespace

bool is_k_dismantable(const TreeDecomposition& d, int k) {
  if (auto r = validate_decomposition_shape(d))
    throw ValidationError("is_k_dismantable: " + *r);
  return dismantable(d, k);
}

std::optional<DismantleCert> k_dismantle_certificate(const TreeDecomposition& d, int k) {
  if (!is_k_dismantable(d, k)) return std::nullopt;
  // d is dismantable; rebuild the first successful move sequence in order
  DismantleCert cert;
  if (is_base(d)) {
    cert.move = "base";
    return cert;
  }
  for (int v : ubiquitous_vertices(d)) {
    TreeDecomposition d2 = strip_vertex(d, v);
    if (dismantable(d2, k)) {
      cert.move = "remove";
      cert.vertex = v;
      cert.children.push_back(*k_dismantle_certificate(d2, k));
      return cert;
    }
  }
  for (auto [x, y] : d.tree.edges()) {
    if (static_cast<int>(sorted_intersection(d.bag(x), d.bag(y)).size()) >= k) continue;
    TreeDecomposition dx = split_side(d, x, y), dy = split_side(d, y, x);
    if (dismantable(dx, k) && dismantable(dy, k)) {
      cert.move = "split";
      cert.edge = {x, y};
      cert.children.push_back(*k_dismantle_certificate(dx, k));
      cert.children.push_back(*k_dismantle_certificate(dy, k));
      return cert;
    }
  }
  throw std::logic_error("k_dismantle_certificate: memo claims dismantable but no move works");
}

bool check_dismantle_certificate(const TreeDecomposition& d, int k,
                                 const DismantleCert& cert) {
  if (cert.move == "base") return is_base(d);
  if (cert.move == "remove") {
    if (cert.children.size() != 1) return false;
    if (!sorted_contains(ubiquitous_vertices(d), cert.vertex)) return false;
    return check_dismantle_certificate(strip_vertex(d, cert.vertex), k, cert.children[0]);
  }
  if (cert.move == "split") {
    auto [x, y] = std::pair(cert.edge[0], cert.edge[1]);
    if (cert.children.size() != 2 || !d.tree.has_edge(x, y)) return false;
    if (static_cast<int>(sorted_intersection(d.bag(x), d.bag(y)).size()) >= k) return false;
    return check_dismantle_certificate(split_side(d, x, y), k, cert.children[0]) &&
           check_dismantle_certificate(split_side(d, y, x), k, cert.children[1]);
  }
  return false;
}

std::optional<TreeDecomposition> dismantle_search(const Graph& g, int k, int t) {
  check_size(g.num_vertices(), 10, "dismantle_search");
  auto [value, witness] = k_treedepth(g, k);
  if (value.is_infinite() || value.finite() > t) return std::nullopt;
  return witness;
}

// --- Helly cover ------------------------------------------------------------

std::vector<int> projection_of_subgraph(const Graph& g, const TreeDecomposition& d,
                                        const std::vector<int>& h_vertices) {
  if (!is_connected_set(g, h_vertices))
    throw ValidationError("projection_of_subgraph: subgraph is not connected");
  std::vector<int> hs(h_vertices);
  std::sort(hs.begin(), hs.end());
  std::vector<int> nodes;
  for (auto& [x, b] : d.bags)
    if (!sorted_intersection(b, hs).empty()) nodes.push_back(x);
  if (!nodes.empty() && !is_connected_set(d.tree, nodes))
    throw ValidationError("projection_of_subgraph: projection is not connected in T");
  return nodes;
}

HellyResult helly_cover(const Graph& g, const TreeDecomposition& d,
                        const std::vector<std::vector<int>>& fam, int dcount) {
  if (auto r = validate_tree_decomposition(g, d))
    throw ValidationError("helly_cover: " + *r);
  int root = d.tree.vertices().front();
  std::map<int, int> depth;
  {
    std::queue<int> q;
    q.push(root);
    depth[root] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : d.tree.neighbors(x))
        if (!depth.count(y)) {
          depth[y] = depth[x] + 1;
          q.push(y);
        }
    }
  }
  struct Member {
    int index;
    std::vector<int> proj;
    int proj_root;  // node of the projection closest to the tree root
  };
  std::vector<Member> remaining;
  for (size_t i = 0; i < fam.size(); i++) {
    Member m;
    m.index = static_cast<int>(i);
    m.proj = projection_of_subgraph(g, d, fam[i]);
    if (m.proj.empty())
      throw ValidationError("helly_cover: family member misses every bag");
    m.proj_root = m.proj.front();
    for (int x : m.proj)
      if (depth[x] < depth[m.proj_root] ||
          (depth[x] == depth[m.proj_root] && x < m.proj_root))
        m.proj_root = x;
    remaining.push_back(std::move(m));
  }
  HellyResult res;
  std::vector<int> roots;
  while (!remaining.empty() && static_cast<int>(res.member_indices.size()) < dcount) {
    // select the member whose projection root is deepest (ties: least index)
    size_t pick = 0;
    for (size_t i = 1; i < remaining.size(); i++)
      if (depth[remaining[i].proj_root] > depth[remaining[pick].proj_root]) pick = i;
    int r = remaining[pick].proj_root;
    res.member_indices.push_back(remaining[pick].index);
    roots.push_back(r);
    // every other member whose projection contains r is covered by bag W_r;
    // the rest cannot enter r's subtree (r was the deepest projection root)
    std::vector<Member> keep;
    for (auto& m : remaining)
      if (!std::count(m.proj.begin(), m.proj.end(), r)) keep.push_back(std::move(m));
    remaining = std::move(keep);
  }
  if (static_cast<int>(res.member_indices.size()) == dcount) {
    res.disjoint = true;
  } else {
    res.disjoint = false;
    res.member_indices.clear();
    res.cover_nodes = roots;
  }
  return res;
}

// --- combine ----------------------------------------------------------------

std::pair<std::vector<int>, TreeDecomposition> combine_gs_decompositions(
    const Graph& g, const std::vector<GSPart>& parts, int k) {
  if (parts.empty()) return {{}, TreeDecomposition::single_bag({})};
  for (auto& p : parts) {
    if (auto r = validate_gs_decomposition(g, p.s, p.d))
      throw ValidationError("combine_gs_decompositions: part invalid: " + *r);
    if (!is_k_dismantable(p.d, k))
      throw ValidationError("combine_gs_decompositions: part not k-dismantable");
  }
  std::vector<int> s_cur(parts[0].s);
  std::sort(s_cur.begin(), s_cur.end());
  TreeDecomposition acc = parts[0].d;
  for (size_t m = 1; m < parts.size(); m++) {
    std::vector<int> sm(parts[m].s);
    std::sort(sm.begin(), sm.end());
    int next_node = acc.tree.vertices().back() + 1;
    Graph rest = g.remove_vertices(s_cur);
    for (auto& comp : connected_components(rest)) {
      auto nb = set_neighborhood(g, comp);
      int anchor = -1;
      for (auto& [x, b] : acc.bags)
        if (is_subset(nb, b)) {
          anchor = x;
          break;
        }
      if (anchor < 0) throw std::logic_error("combine: no anchor bag for component");
      TreeDecomposition piece = restrict_bags(parts[m].d, comp);
      // relabel piece nodes to fresh ids and hang below the anchor
      std::map<int, int> relabel;
      for (int x : piece.tree.vertices()) relabel[x] = next_node++;
      Graph t2 = acc.tree;
      for (auto& [old_id, new_id] : relabel) t2 = t2.with_vertex(new_id);
      for (auto [x, y] : piece.tree.edges()) t2 = t2.with_edge(relabel[x], relabel[y]);
      t2 = t2.with_edge(anchor, relabel[piece.tree.vertices().front()]);
      const std::vector<int> anchor_bag = acc.bag(anchor);
      acc.tree = t2;
      for (auto& [x, b] : piece.bags)
        acc.bags[relabel[x]] = sorted_union(b, anchor_bag);
    }
    s_cur = sorted_union(s_cur, sm);
  }
  return {s_cur, acc};
}

}  // namespace kladder

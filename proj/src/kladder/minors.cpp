#include "kladder/minors.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "kladder/canon.hpp"
#include "kladder/errors.hpp"

namespace kladder {

Report validate_model(const MinorModel& m) {
  std::set<int> used;
  for (int x : m.pattern.vertices()) {
    auto it = m.branch_sets.find(x);
    if (it == m.branch_sets.end() || it->second.empty())
      return "no branch set for pattern vertex " + std::to_string(x);
    for (int u : it->second) {
      if (!m.host.has_vertex(u))
        return "branch set of " + std::to_string(x) + " uses non-host vertex " +
               std::to_string(u);
      if (!used.insert(u).second)
        return "branch sets overlap at host vertex " + std::to_string(u);
    }
    if (!is_connected_set(m.host, it->second))
      return "branch set of " + std::to_string(x) + " is disconnected";
  }
  for (auto& [x, b] : m.branch_sets)
    if (!m.pattern.has_vertex(x))
      return "branch set for unknown pattern vertex " + std::to_string(x);
  for (auto [x, y] : m.pattern.edges()) {
    bool hit = false;
    for (int u : m.branch_sets.at(x)) {
      for (int v : m.host.neighbors(u))
        if (sorted_contains(m.branch_sets.at(y), v)) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (!hit)
      return "pattern edge " + std::to_string(x) + "-" + std::to_string(y) +
             " is not realized";
  }
  return std::nullopt;
}

// --- exhaustive minor search ------------------------------------------------

namespace {

struct ModelSearch {
  const Graph& h;
  const Graph& g;
  std::vector<int> hvs, gvs;
  std::vector<unsigned> adj;   // host adjacency masks by position
  std::vector<int> order;      // pattern vertices, descending degree
  std::vector<unsigned> sets;  // chosen branch masks, parallel to order

  ModelSearch(const Graph& hh, const Graph& gg) : h(hh), g(gg) {
    hvs = h.vertices();
    gvs = g.vertices();
    int n = static_cast<int>(gvs.size());
    adj.assign(n, 0);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++)
        if (i != j && g.has_edge(gvs[i], gvs[j])) adj[i] |= 1u << j;
    order = hvs;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    sets.resize(order.size());
  }

  unsigned mask_neighbors(unsigned m) const {
    unsigned out = 0;
    for (int i = 0; i < static_cast<int>(gvs.size()); i++)
      if (m & (1u << i)) out |= adj[i];
    return out & ~m;
  }

  bool touches(unsigned a, unsigned b) const { return (mask_neighbors(a) & b) != 0; }

  // Enumerate connected subsets of `allowed` of size <= maxsize containing
  // `mask` (candidates processed include/exclude to avoid duplicates).
  template <typename F>
  bool grow(unsigned mask, unsigned banned, unsigned allowed, int maxsize, F&& emit) {
    if (emit(mask)) return true;
    if (__builtin_popcount(mask) >= maxsize) return false;
    unsigned ext = mask_neighbors(mask) & allowed & ~banned;
    while (ext) {
      unsigned bit = ext & (~ext + 1);
      ext &= ext - 1;
      if (grow(mask | bit, banned, allowed, maxsize, emit)) return true;
      banned |= bit;
    }
    return false;
  }

  bool run(size_t i, unsigned used) {
    if (i == order.size()) return true;
    unsigned avail = (gvs.size() == 32 ? ~0u : (1u << gvs.size()) - 1) & ~used;
    int budget =
        __builtin_popcount(avail) - static_cast<int>(order.size() - i - 1);
    if (budget < 1) return false;
    int v = order[i];
    // seeds ascending; each connected set enumerated once (seed = least bit)
    unsigned seeds = avail;
    while (seeds) {
      unsigned seed = seeds & (~seeds + 1);
      seeds &= seeds - 1;
      unsigned allowed = avail & ~(seed - 1);
      bool ok = grow(seed, 0, allowed & ~seed, budget, [&](unsigned mask) {
        for (size_t e = 0; e < i; e++)
          if (h.has_edge(v, order[e]) && !touches(mask, sets[e])) return false;
        sets[i] = mask;
        return run(i + 1, used | mask);
      });
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<MinorModel> find_minor_model(const Graph& h, const Graph& g) {
  check_size(h.num_vertices(), 10, "find_minor_model pattern");
  check_size(g.num_vertices(), 14, "find_minor_model host");
  if (h.empty()) return MinorModel{h, g, {}};
  if (h.num_vertices() > g.num_vertices()) return std::nullopt;
  ModelSearch search(h, g);
  if (!search.run(0, 0)) return std::nullopt;
  MinorModel m{h, g, {}};
  for (size_t i = 0; i < search.order.size(); i++) {
    std::vector<int> bs;
    for (int p = 0; p < static_cast<int>(search.gvs.size()); p++)
      if (search.sets[i] & (1u << p)) bs.push_back(search.gvs[p]);
    m.branch_sets[search.order[i]] = bs;
  }
  return m;
}

// --- k-ladders --------------------------------------------------------------

std::vector<int> KLadder::row(int i) const {
  std::vector<int> out;
  for (int j = 0; j < l; j++) out.push_back(vertex(i, j));
  return out;
}

std::vector<int> KLadder::column(int j) const {
  std::vector<int> out;
  for (int i = 0; i < k; i++) out.push_back(vertex(i, j));
  return out;
}

KLadder make_k_ladder(int k, int l, const std::vector<Graph>& column_trees) {
  if (k < 1 || l < 1) throw ValidationError("make_k_ladder: k, l must be positive");
  if (static_cast<int>(column_trees.size()) != l)
    throw ValidationError("make_k_ladder: need one column tree per column");
  KLadder lad{k, l, {}};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; i++)
    for (int j = 0; j + 1 < l; j++) edges.push_back({lad.vertex(i, j), lad.vertex(i, j + 1)});
  for (int j = 0; j < l; j++) {
    const Graph& t = column_trees[j];
    if (t.num_vertices() != k || t.num_edges() != k - 1 || !is_connected(t) ||
        t.vertices() != path_graph(k).vertices())
      throw ValidationError("make_k_ladder: column tree must be a tree on {0..k-1}");
    for (auto [a, b] : t.edges()) edges.push_back({lad.vertex(a, j), lad.vertex(b, j)});
  }
  lad.graph = Graph::from_edges(k * l, edges);
  return lad;
}

Report validate_k_ladder(const KLadder& lad) {
  if (lad.k < 1 || lad.l < 1) return "empty ladder";
  if (lad.graph.num_vertices() != lad.k * lad.l) return "wrong vertex count";
  for (auto [u, v] : lad.graph.edges()) {
    int iu = u / lad.l, ju = u % lad.l, iv = v / lad.l, jv = v % lad.l;
    bool row_edge = iu == iv && std::abs(ju - jv) == 1;
    bool col_edge = ju == jv;
    if (!row_edge && !col_edge)
      return "edge " + std::to_string(u) + "-" + std::to_string(v) +
             " is neither a row step nor a column edge";
  }
  for (int i = 0; i < lad.k; i++)
    for (int j = 0; j + 1 < lad.l; j++)
      if (!lad.graph.has_edge(lad.vertex(i, j), lad.vertex(i, j + 1)))
        return "row " + std::to_string(i) + " is not a path";
  for (int j = 0; j < lad.l; j++)
    if (!is_connected_set(lad.graph, lad.column(j)))
      return "column " + std::to_string(j) + " is not connected";
  return std::nullopt;
}

// --- T x P_l from a ladder --------------------------------------------------

namespace {

// Lexicographically least spanning tree of column j, as row-index edges.
std::vector<std::pair<int, int>> column_shape(const KLadder& lad, int j) {
  std::vector<std::pair<int, int>> cand, out;
  for (int a = 0; a < lad.k; a++)
    for (int b = a + 1; b < lad.k; b++)
      if (lad.graph.has_edge(lad.vertex(a, j), lad.vertex(b, j))) cand.push_back({a, b});
  std::vector<int> rep(lad.k);
  for (int i = 0; i < lad.k; i++) rep[i] = i;
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (auto [a, b] : cand) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      rep[ra] = rb;
      out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace

std::pair<Graph, MinorModel> tree_times_path_from_ladder(const KLadder& lad, int l_target) {
  if (l_target < 1) throw ValidationError("tree_times_path_from_ladder: l must be positive");
  if (Report r = validate_k_ladder(lad))
    throw ValidationError("tree_times_path_from_ladder: " + *r);
  std::map<std::vector<std::pair<int, int>>, std::vector<int>> groups;
  for (int j = 0; j < lad.l; j++) groups[column_shape(lad, j)].push_back(j);
  const std::vector<std::pair<int, int>>* shape = nullptr;
  int first_col = lad.l;
  for (auto& [sh, cols] : groups)
    if (static_cast<int>(cols.size()) >= l_target && cols[0] < first_col) {
      shape = &sh;
      first_col = cols[0];
    }
  if (!shape)
    throw ValidationError("tree_times_path_from_ladder: ladder too short, no tree shape on " +
                          std::to_string(l_target) + " columns");
  std::vector<int> cols(groups[*shape].begin(), groups[*shape].begin() + l_target);
  Graph t = Graph::from_edges(lad.k, *shape);
  MinorModel m{cartesian_product(t, path_graph(l_target)), lad.graph, {}};
  for (int a = 0; a < lad.k; a++)
    for (int s = 0; s < l_target; s++) {
      int hi = s + 1 < l_target ? cols[s + 1] - 1 : cols[s];
      std::vector<int> bs;
      for (int j = cols[s]; j <= hi; j++) bs.push_back(lad.vertex(a, j));
      m.branch_sets[a * l_target + s] = bs;
    }
  if (Report r = validate_model(m))
    throw std::logic_error("tree_times_path_from_ladder: invalid model: " + *r);
  return {t, m};
}

// --- Erdos-Szekeres ---------------------------------------------------------

std::optional<MonotoneWitness> erdos_szekeres(const std::vector<int>& perm, int r, int s) {
  int n = static_cast<int>(perm.size());
  std::vector<int> inc(n, 1), dec(n, 1), pinc(n, -1), pdec(n, -1);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < i; j++) {
      if (perm[j] < perm[i] && inc[j] + 1 > inc[i]) {
        inc[i] = inc[j] + 1;
        pinc[i] = j;
      }
      if (perm[j] > perm[i] && dec[j] + 1 > dec[i]) {
        dec[i] = dec[j] + 1;
        pdec[i] = j;
      }
    }
  auto trace = [&](const std::vector<int>& pred, int end, int want) {
    std::vector<int> chain;
    for (int x = end; x != -1; x = pred[x]) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    chain.resize(want);
    return chain;
  };
  for (int i = 0; i < n; i++)
    if (inc[i] >= r) return MonotoneWitness{true, trace(pinc, i, r)};
  for (int i = 0; i < n; i++)
    if (dec[i] >= s) return MonotoneWitness{false, trace(pdec, i, s)};
  return std::nullopt;
}

// --- k leaves or a k-vertex path --------------------------------------------

namespace {

// Farthest vertex from u with BFS parents; ties broken by least identity.
std::pair<int, std::map<int, int>> bfs_far(const Graph& g, int u) {
  std::map<int, int> dist, parent;
  dist[u] = 0;
  parent[u] = -1;
  std::queue<int> q;
  q.push(u);
  int far = u;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (dist[x] > dist[far]) far = x;
    for (int y : g.neighbors(x))
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        q.push(y);
      }
  }
  return {far, parent};
}

}  // namespace

LeavesOrPath tree_leaves_or_path(const Graph& t, int k) {
  if (t.empty() || k < 1) throw ValidationError("tree_leaves_or_path: empty tree or k < 1");
  std::vector<int> leaves;
  for (int u : t.vertices())
    if (t.degree(u) <= 1) leaves.push_back(u);
  if (static_cast<int>(leaves.size()) >= k) {
    leaves.resize(k);
    return {true, leaves};
  }
  // longest path in a tree via double BFS from the least vertex
  int a = bfs_far(t, t.vertices()[0]).first;
  auto [b, parent] = bfs_far(t, a);
  PathSeq path;
  for (int x = b; x != -1; x = parent.at(x)) path.push_back(x);
  if (static_cast<int>(path.size()) < k)
    throw ValidationError("tree_leaves_or_path: tree too small for either arm");
  path.resize(k);
  return {false, path};
}

// --- private intervals ------------------------------------------------------

PrivateIntervals private_intervals(const Graph& g, const PathSeq& p,
                                   const std::vector<std::vector<int>>& subgraphs,
                                   int l_target) {
  if (!is_valid_path(g, p)) throw ValidationError("private_intervals: invalid path");
  int t = static_cast<int>(subgraphs.size()), np = static_cast<int>(p.size());
  std::vector<std::vector<int>> hits(t);
  for (int m = 0; m < t; m++) {
    if (!is_connected_set(g, subgraphs[m]))
      throw ValidationError("private_intervals: disconnected member");
    for (int i = 0; i < np; i++)
      if (sorted_contains(subgraphs[m], p[i])) hits[m].push_back(i);
    if (hits[m].empty())
      throw ValidationError("private_intervals: member misses the path");
  }
  // For a prefix cut b, member m occupies window [first hit, last hit <= b];
  // a maximal family of disjoint windows in order is exactly a selection
  // where every member's prefix hits sit inside its own interval.
  PrivateIntervals best;
  for (int b = 0; b < np; b++) {
    struct W {
      int lo, hi, m;
    };
    std::vector<W> ws;
    for (int m = 0; m < t; m++) {
      if (hits[m][0] > b) continue;
      int hi = hits[m][0];
      for (int h : hits[m])
        if (h <= b) hi = h;
      ws.push_back({hits[m][0], hi, m});
    }
    std::sort(ws.begin(), ws.end(), [](const W& x, const W& y) {
      if (x.hi != y.hi) return x.hi < y.hi;
      if (x.lo != y.lo) return x.lo < y.lo;
      return x.m < y.m;
    });
    PrivateIntervals cur;
    cur.prefix_end = b;
    int reach = -1;
    for (const W& w : ws)
      if (w.lo > reach) {
        cur.members.push_back(w.m);
        cur.intervals.push_back({w.lo, w.hi});
        reach = w.hi;
      }
    if (cur.members.size() >= best.members.size()) best = cur;
  }
  if (static_cast<int>(best.members.size()) > l_target) {
    best.members.resize(l_target);
    best.intervals.resize(l_target);
  }
  return best;
}

// --- ladder extraction ------------------------------------------------------

namespace {

struct RowData {
  PathSeq path;                                // oriented
  std::map<int, std::pair<int, int>> iv;       // global member -> interval
  int prefix = -1;
};

// Longest subsequence of pd-members whose global ranks increase.
std::vector<int> lis_members(const PrivateIntervals& pd, const std::vector<int>& local_to_global,
                             const std::map<int, int>& rank) {
  std::vector<int> seq;
  for (int m : pd.members) seq.push_back(rank.at(local_to_global[m]));
  int n = static_cast<int>(seq.size());
  std::vector<int> len(n, 1), pred(n, -1);
  int bi = 0;
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < i; j++)
      if (seq[j] < seq[i] && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        pred[i] = j;
      }
    if (len[i] > len[bi]) bi = i;
  }
  std::vector<int> pick;
  if (n == 0) return pick;
  for (int x = bi; x != -1; x = pred[x]) pick.push_back(x);
  std::reverse(pick.begin(), pick.end());
  std::vector<int> out;
  for (int i : pick) out.push_back(local_to_global[pd.members[i]]);
  return out;
}

}  // namespace

std::pair<KLadder, MinorModel> extract_ladder(const Graph& g, const std::vector<PathSeq>& rows,
                                              const std::vector<std::vector<int>>& connectors) {
  int k = static_cast<int>(rows.size());
  if (k < 1 || connectors.empty())
    throw ValidationError("extract_ladder: need rows and connectors");
  std::set<int> row_seen;
  for (const PathSeq& r : rows) {
    if (!is_valid_path(g, r)) throw ValidationError("extract_ladder: invalid row path");
    for (int u : r)
      if (!row_seen.insert(u).second)
        throw ValidationError("extract_ladder: rows are not disjoint");
  }
  std::set<int> con_seen;
  for (const auto& c : connectors) {
    if (!is_connected_set(g, c))
      throw ValidationError("extract_ladder: disconnected connector");
    for (int u : c)
      if (!con_seen.insert(u).second)
        throw ValidationError("extract_ladder: connectors are not disjoint");
  }

  std::vector<RowData> rd(k);
  // Row 0 fixes the reference order.
  PrivateIntervals p0 = private_intervals(g, rows[0], connectors,
                                          static_cast<int>(connectors.size()));
  std::vector<int> selected = p0.members;  // global indices, reference order
  rd[0].path = rows[0];
  rd[0].prefix = p0.prefix_end;
  for (size_t j = 0; j < p0.members.size(); j++) rd[0].iv[p0.members[j]] = p0.intervals[j];

  // Later rows: private intervals in the better of the two orientations,
  // aligned to the reference order by longest increasing subsequence (the
  // reversed orientation plays the decreasing arm).
  for (int i = 1; i < k; i++) {
    std::map<int, int> rank;
    for (size_t r = 0; r < selected.size(); r++) rank[selected[r]] = static_cast<int>(r);
    std::vector<std::vector<int>> subs;
    for (int m : selected) subs.push_back(connectors[m]);
    PathSeq fwd = rows[i], rev = rows[i];
    std::reverse(rev.begin(), rev.end());
    PrivateIntervals pf = private_intervals(g, fwd, subs, static_cast<int>(subs.size()));
    PrivateIntervals pr = private_intervals(g, rev, subs, static_cast<int>(subs.size()));
    std::vector<int> kf = lis_members(pf, selected, rank);
    std::vector<int> kr = lis_members(pr, selected, rank);
    bool use_fwd = kf.size() >= kr.size();
    const PrivateIntervals& pd = use_fwd ? pf : pr;
    rd[i].path = use_fwd ? fwd : rev;
    rd[i].prefix = pd.prefix_end;
    for (size_t j = 0; j < pd.members.size(); j++)
      rd[i].iv[selected[pd.members[j]]] = pd.intervals[j];
    selected = use_fwd ? kf : kr;
    if (selected.empty()) throw ValidationError("extract_ladder: alignment lost all connectors");
  }

  int m = static_cast<int>(selected.size());
  KLadder lad{k, m, {}};
  MinorModel model{{}, g, {}};
  std::vector<std::vector<std::vector<int>>> seg(k, std::vector<std::vector<int>>(m));
  for (int i = 0; i < k; i++) {
    for (int j = 0; j < m; j++) {
      int lo = rd[i].iv.at(selected[j]).first;
      int hi = j + 1 < m ? rd[i].iv.at(selected[j + 1]).first - 1 : rd[i].prefix;
      for (int pos = lo; pos <= hi; pos++) seg[i][j].push_back(rd[i].path[pos]);
      std::sort(seg[i][j].begin(), seg[i][j].end());
      model.branch_sets[lad.vertex(i, j)] = seg[i][j];
    }
  }
  // Distribute each connector's leftover vertices to the nearest row segment
  // (multi-source BFS inside the connector; ties go to the smaller row).
  for (int j = 0; j < m; j++) {
    const std::vector<int>& con = connectors[selected[j]];
    std::map<int, int> label;
    std::queue<int> q;
    for (int i = 0; i < k; i++)
      for (int u : sorted_intersection(con, seg[i][j]))
        if (!label.count(u)) {
          label[u] = i;
          q.push(u);
        }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (sorted_contains(con, v) && !label.count(v)) {
          label[v] = label[u];
          q.push(v);
        }
    }
    for (int u : con) {
      bool in_seg = false;
      for (int i = 0; i < k && !in_seg; i++)
        for (int jj = 0; jj < m && !in_seg; jj++)
          if (sorted_contains(seg[i][jj], u)) in_seg = true;
      if (in_seg) continue;
      if (!label.count(u)) throw std::logic_error("extract_ladder: unlabelled connector vertex");
      auto& bs = model.branch_sets[lad.vertex(label[u], j)];
      bs = sorted_union(bs, {u});
    }
  }
  // Ladder pattern: row paths plus realized column contacts.
  std::vector<std::pair<int, int>> pedges;
  for (int i = 0; i < k; i++)
    for (int j = 0; j + 1 < m; j++) pedges.push_back({lad.vertex(i, j), lad.vertex(i, j + 1)});
  for (int j = 0; j < m; j++)
    for (int i1 = 0; i1 < k; i1++)
      for (int i2 = i1 + 1; i2 < k; i2++) {
        bool contact = false;
        for (int u : model.branch_sets[lad.vertex(i1, j)]) {
          for (int v : g.neighbors(u))
            if (sorted_contains(model.branch_sets[lad.vertex(i2, j)], v)) {
              contact = true;
              break;
            }
          if (contact) break;
        }
        if (contact) pedges.push_back({lad.vertex(i1, j), lad.vertex(i2, j)});
      }
  lad.graph = Graph::from_edges(k * m, pedges);
  model.pattern = lad.graph;
  if (Report r = validate_k_ladder(lad))
    throw std::logic_error("extract_ladder: invalid ladder: " + *r);
  if (Report r = validate_model(model))
    throw std::logic_error("extract_ladder: invalid model: " + *r);
  return {lad, model};
}

std::optional<std::pair<Graph, MinorModel>> has_minor_tree_times_path(const Graph& g, int k,
                                                                      int l) {
  if (k < 1 || l < 1)
    throw ValidationError("has_minor_tree_times_path: k, l must be positive");
  check_size(g.num_vertices(), 14, "has_minor_tree_times_path");
  for (const Graph& t : enumerate_trees_up_to_iso(k)) {
    Graph pattern = cartesian_product(t, path_graph(l));
    if (auto m = find_minor_model(pattern, g)) return std::make_pair(t, *m);
  }
  return std::nullopt;
}

}  // namespace kladder

#include "kladder/slide.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "kladder/errors.hpp"

namespace kladder {

namespace {

std::vector<int> tree_route(const Graph& t, int from, int to) {
  std::map<int, int> par;
  std::queue<int> q;
  par[from] = from;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == to) break;
    for (int v : t.neighbors(u))
      if (!par.count(v)) {
        par[v] = u;
        q.push(v);
      }
  }
  if (!par.count(to)) throw std::logic_error("tree_route: disconnected");
  std::vector<int> p{to};
  while (p.back() != from) p.push_back(par[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

Report validate_sliding(const SlidingSequence& s) {
  if (s.injections.empty()) return std::string("sliding: no injections");
  std::vector<int> pverts = s.pattern.vertices();
  for (size_t i = 0; i < s.injections.size(); ++i) {
    const auto& phi = s.injections[i];
    if (static_cast<int>(phi.size()) != s.pattern.num_vertices())
      return "sliding: injection " + std::to_string(i) + " has the wrong domain";
    std::set<int> img;
    for (const auto& [x, v] : phi) {
      if (!s.pattern.has_vertex(x))
        return "sliding: injection " + std::to_string(i) + " maps a non-pattern vertex";
      if (!s.host.has_vertex(v))
        return "sliding: injection " + std::to_string(i) + " hits a non-host vertex";
      if (!img.insert(v).second)
        return "sliding: injection " + std::to_string(i) + " is not injective";
    }
  }
  for (size_t i = 0; i + 1 < s.injections.size(); ++i) {
    const auto& p0 = s.injections[i];
    const auto& p1 = s.injections[i + 1];
    std::vector<int> moved;
    for (int x : pverts)
      if (p0.at(x) != p1.at(x)) moved.push_back(x);
    if (moved.size() != 1)
      return "sliding: step " + std::to_string(i) + " moves " +
             std::to_string(moved.size()) + " tokens";
    int x = moved[0];
    if (!s.host.has_edge(p0.at(x), p1.at(x)))
      return "sliding: step " + std::to_string(i) + " moves token " + std::to_string(x) +
             " along a non-edge";
  }
  for (auto [x, y] : s.pattern.edges()) {
    bool realized = false;
    for (const auto& phi : s.injections)
      if (s.host.has_edge(phi.at(x), phi.at(y))) {
        realized = true;
        break;
      }
    if (!realized)
      return "sliding: pattern edge " + std::to_string(x) + "-" + std::to_string(y) +
             " is never realized";
  }
  return std::nullopt;
}

SlidingSequence path_sliding_in_tree(const Graph& t, int k) {
  if (k < 1) throw ValidationError("path sliding: k must be positive");
  int n = t.num_vertices();
  check_size(n, 64, "path sliding tree");
  if (n != t.num_edges() + 1 || !is_connected(t))
    throw ValidationError("path sliding: host is not a tree");
  if (n < 2 * k - 1)
    throw ValidationError("path sliding: tree needs at least 2k-1 vertices");

  SlidingSequence s;
  s.pattern = path_graph(k);
  s.host = t;

  // Longest path, deterministically: all-pairs BFS, maximum distance, then
  // the lexicographically least endpoint pair.
  std::vector<int> verts = t.vertices();
  int bu = verts[0], bv = verts[0], bd = 0;
  for (int u : verts) {
    std::map<int, int> dist;
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      int w = q.front();
      q.pop();
      for (int x : t.neighbors(w))
        if (!dist.count(x)) {
          dist[x] = dist[w] + 1;
          q.push(x);
        }
    }
    for (int v : verts)
      if (u < v && (dist[v] > bd || (dist[v] == bd && std::make_pair(u, v) <
                                                          std::make_pair(bu, bv)))) {
        bd = dist[v];
        bu = u;
        bv = v;
      }
  }
  std::vector<int> path = tree_route(t, bu, bv);
  int p = static_cast<int>(path.size()) - 1;

  if (static_cast<int>(path.size()) >= k) {
    std::map<int, int> phi;
    for (int i = 0; i < k; ++i) phi[i] = path[i];
    s.injections.push_back(phi);
    if (auto r = validate_sliding(s)) throw std::logic_error("path sliding: " + *r);
    return s;
  }

  std::set<int> on_path(path.begin(), path.end());
  std::vector<int> off;
  for (int v : verts)
    if (!on_path.count(v)) off.push_back(v);
  if (static_cast<int>(off.size()) < k)
    throw std::logic_error("path sliding: not enough off-path vertices");

  std::map<int, int> pos;  // token -> host vertex
  std::map<int, int> occ;  // host vertex -> token
  for (int i = 0; i < k; ++i) {
    pos[i] = off[i];
    occ[off[i]] = i;
  }
  s.injections.push_back(pos);
  struct Move {
    int token, from, to;
  };
  auto apply = [&](int token, int to, std::vector<Move>* log) {
    int from = pos.at(token);
    if (!t.has_edge(from, to)) throw std::logic_error("path sliding: move along a non-edge");
    if (occ.count(to)) throw std::logic_error("path sliding: move onto an occupied vertex");
    occ.erase(from);
    occ[to] = token;
    pos[token] = to;
    s.injections.push_back(pos);
    if (log) log->push_back({token, from, to});
  };
  // Nearest path vertex (unique in a tree) and its index.
  std::map<int, int> pindex;
  for (int i = 0; i <= p; ++i) pindex[path[i]] = i;
  auto proj_index = [&](int v) {
    for (int w : tree_route(t, v, path[0]))
      if (pindex.count(w)) return pindex.at(w);
    throw std::logic_error("path sliding: projection not found");
  };
  // Tokens sitting on the tree path from v to path[idx], excluding the path
  // vertex itself, nearest first.
  auto tokens_towards = [&](int v, int idx) {
    std::vector<int> route = tree_route(t, v, path[idx]);
    std::vector<int> toks;
    for (size_t j = route.size() - 1; j-- > 0;)
      if (occ.count(route[j])) toks.push_back(occ.at(route[j]));
    return toks;
  };
  auto walk = [&](int token, const std::vector<int>& route, std::vector<Move>* log) {
    for (int v : route) apply(token, v, log);
  };
  auto route_to_slot = [&](int from, int meet_idx, int slot_idx) {
    std::vector<int> route = tree_route(t, from, path[meet_idx]);
    route.erase(route.begin());
    int step = slot_idx < meet_idx ? -1 : 1;
    for (int i = meet_idx + step; i != slot_idx + step; i += step) route.push_back(path[i]);
    return route;
  };

  for (int e = 0; e + 1 < k; ++e) {
    std::vector<Move> log;
    int sx = e, sy = e + 1;
    int i = proj_index(pos[sx]), j = proj_index(pos[sy]);
    if (i > j) {
      std::swap(sx, sy);
      std::swap(i, j);
    }
    std::vector<int> xroute = tree_route(t, pos[sx], path[i]);
    bool divert = std::find(xroute.begin(), xroute.end(), pos[sy]) != xroute.end();
    // Stage 1: clear the x-side branch into the path prefix, the pair token
    // ending next to its meeting point. A y-token sharing the branch is
    // diverted one step past the meeting point instead.
    std::vector<int> xtoks = tokens_towards(pos[sx], i);
    int r1 = static_cast<int>(xtoks.size()) - (divert ? 1 : 0);
    if (r1 > i) throw std::logic_error("path sliding: prefix capacity exceeded");
    int slot = i - r1;
    for (int tok : xtoks) {
      if (divert && tok == sy) {
        if (i + 1 > p) throw std::logic_error("path sliding: no divert slot");
        walk(tok, route_to_slot(pos[tok], i, i + 1), &log);
      } else {
        walk(tok, route_to_slot(pos[tok], i, slot), &log);
        ++slot;
      }
    }
    int sy_idx;
    if (divert) {
      sy_idx = i + 1;
    } else {
      // Stage 2: clear the y-side branch into the path suffix, the pair
      // token ending just past its meeting point.
      std::vector<int> ytoks = tokens_towards(pos[sy], j);
      int r2 = static_cast<int>(ytoks.size());
      if (j + r2 > p) throw std::logic_error("path sliding: suffix capacity exceeded");
      slot = j + r2;
      for (int tok : ytoks) {
        walk(tok, route_to_slot(pos[tok], j, slot), &log);
        --slot;
      }
      sy_idx = j + 1;
    }
    // Stage 3: bring the second token down the path to meet the first.
    std::vector<int> down;
    for (int c = sy_idx - 1; c >= i; --c) down.push_back(path[c]);
    walk(sy, down, &log);
    if (!t.has_edge(pos[sx], pos[sy]))
      throw std::logic_error("path sliding: pair not adjacent after the shuttle");
    // Return to the start position so the next pair sees a clean slate.
    if (e + 2 < k)
      for (size_t mi = log.size(); mi-- > 0;) apply(log[mi].token, log[mi].from, nullptr);
  }
  if (auto r = validate_sliding(s)) throw std::logic_error("path sliding: " + *r);
  return s;
}

MinorModel sliding_to_model(const SlidingSequence& s, int l) {
  if (l < 1) throw ValidationError("sliding model: l must be positive");
  if (auto r = validate_sliding(s)) throw ValidationError("sliding model: " + *r);
  int m = static_cast<int>(s.injections.size());
  long long cols = static_cast<long long>(l) * (2 * m - 1);
  check_size(static_cast<int>(cols), 100000, "sliding model columns");
  check_size(static_cast<int>(cols * s.host.num_vertices()), 2000000,
             "sliding model host");
  int ncols = static_cast<int>(cols);

  Graph hp = cartesian_product(s.host, path_graph(ncols));
  Graph pp = cartesian_product(s.pattern, path_graph(l));
  std::vector<int> hverts = s.host.vertices();
  std::map<int, int> hpos;
  for (size_t i = 0; i < hverts.size(); ++i) hpos[hverts[i]] = static_cast<int>(i);
  std::vector<int> pverts = s.pattern.vertices();
  std::map<int, int> ppos;
  for (size_t i = 0; i < pverts.size(); ++i) ppos[pverts[i]] = static_cast<int>(i);

  MinorModel mm;
  mm.pattern = pp;
  mm.host = hp;
  for (int x : pverts) {
    // Trajectory block, 1-based columns 1..2m-1.
    std::set<std::pair<int, int>> b0;
    for (int i = 1; i <= m; ++i) b0.insert({s.injections[i - 1].at(x), i});
    for (int i = 1; i <= m - 1; ++i)
      if (s.injections[i - 1].at(x) != s.injections[i].at(x))
        b0.insert({s.injections[i - 1].at(x), i + 1});
    std::set<std::pair<int, int>> b1 = b0;
    for (auto [u, i] : b0) b1.insert({u, 2 * m - i});
    for (int j = 1; j <= l; ++j) {
      std::vector<int> cells;
      for (auto [u, i] : b1) {
        int col = i + (2 * m - 1) * (j - 1);  // 1-based
        cells.push_back(hpos.at(u) * ncols + (col - 1));
      }
      std::sort(cells.begin(), cells.end());
      mm.branch_sets[ppos.at(x) * l + (j - 1)] = cells;
    }
  }
  if (auto r = validate_model(mm)) throw std::logic_error("sliding model: " + *r);
  return mm;
}

MinorModel grid_in_ladder(int k, int l, const Graph& t) {
  SlidingSequence s = path_sliding_in_tree(t, k);
  MinorModel mm = sliding_to_model(s, l);
  if (!(mm.pattern == grid_graph(k, l)))
    throw std::logic_error("grid in ladder: pattern is not the grid");
  return mm;
}

}  // namespace kladder

#include "kladder/menger.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "kladder/errors.hpp"

namespace kladder {

namespace {

// Small dense max-flow network (Edmonds-Karp); capacities fit in int.
struct Flow {
  int n;
  std::vector<std::vector<int>> cap, flow;
  explicit Flow(int nn) : n(nn), cap(nn, std::vector<int>(nn, 0)), flow(cap) {}

  int residual(int u, int v) const { return cap[u][v] - flow[u][v]; }

  bool augment(int s, int t) {
    std::vector<int> prev(n, -1);
    prev[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && prev[t] == -1) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; v++)
        if (prev[v] == -1 && residual(u, v) > 0) {
          prev[v] = u;
          q.push(v);
        }
    }
    if (prev[t] == -1) return false;
    for (int v = t; v != s; v = prev[v]) {
      flow[prev[v]][v] += 1;
      flow[v][prev[v]] -= 1;
    }
    return true;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(n, false);
    seen[s] = true;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; v++)
        if (!seen[v] && residual(u, v) > 0) {
          seen[v] = true;
          q.push(v);
        }
    }
    return seen;
  }
};

}  // namespace

MengerResult max_disjoint_paths(const Graph& g, const std::vector<int>& z1,
                                const std::vector<int>& z2) {
  for (int u : z1)
    if (!g.has_vertex(u)) throw ValidationError("max_disjoint_paths: Z1 not in V(G)");
  for (int u : z2)
    if (!g.has_vertex(u)) throw ValidationError("max_disjoint_paths: Z2 not in V(G)");
  auto vs = g.vertices();
  int n = static_cast<int>(vs.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; i++) pos[vs[i]] = i;
  // node 2i = v_in, 2i+1 = v_out; 2n = source, 2n+1 = sink. Only the in->out
  // edges have capacity 1, so the min cut consists of vertices.
  const int INF = n + 2;
  Flow f(2 * n + 2);
  int s = 2 * n, t = 2 * n + 1;
  for (int i = 0; i < n; i++) f.cap[2 * i][2 * i + 1] = 1;
  for (auto [u, v] : g.edges()) {
    f.cap[2 * pos[u] + 1][2 * pos[v]] = INF;
    f.cap[2 * pos[v] + 1][2 * pos[u]] = INF;
  }
  for (int u : z1) f.cap[s][2 * pos[u]] = INF;
  for (int u : z2) f.cap[2 * pos[u] + 1][t] = INF;

  MengerResult res;
  while (f.augment(s, t)) res.count++;

  // path decomposition of the flow
  std::set<int> z1set(z1.begin(), z1.end()), z2set(z2.begin(), z2.end());
  for (int u0 : z1) {
    while (f.flow[s][2 * pos[u0]] > 0) {
      f.flow[s][2 * pos[u0]]--;
      PathSeq p;
      int cur = u0;
      while (true) {
        p.push_back(cur);
        f.flow[2 * pos[cur]][2 * pos[cur] + 1]--;
        int out = 2 * pos[cur] + 1;
        if (f.flow[out][t] > 0) {
          f.flow[out][t]--;
          break;
        }
        int next = -1;
        for (int j = 0; j < n && next == -1; j++)
          if (f.flow[out][2 * j] > 0) next = j;
        if (next == -1) throw std::logic_error("max_disjoint_paths: broken flow");
        f.flow[out][2 * next]--;
        cur = vs[next];
      }
      // truncate: start at the last Z1 vertex, stop at the first Z2 vertex after
      size_t a = 0, b = p.size() - 1;
      for (size_t i = 0; i < p.size(); i++)
        if (z1set.count(p[i])) a = i;
      for (size_t i = a; i < p.size(); i++)
        if (z2set.count(p[i])) {
          b = i;
          break;
        }
      res.paths.emplace_back(p.begin() + a, p.begin() + b + 1);
    }
  }

  // min cut from residual reachability (recompute flow for the residual)
  Flow f2(2 * n + 2);
  f2.cap = f.cap;
  while (f2.augment(s, t)) {
  }
  auto seen = f2.reachable(s);
  for (int i = 0; i < n; i++)
    if (seen[2 * i] && !seen[2 * i + 1]) res.cut.push_back(vs[i]);
  return res;
}

bool is_z_cut(const Graph& g, const std::vector<int>& z1, const std::vector<int>& z2,
              const std::vector<int>& cut) {
  std::set<int> c(cut.begin(), cut.end());
  std::set<int> frontier, seen;
  std::queue<int> q;
  for (int u : z1)
    if (!c.count(u) && seen.insert(u).second) q.push(u);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (std::find(z2.begin(), z2.end(), u) != z2.end()) return false;
    for (int v : g.neighbors(u))
      if (!c.count(v) && seen.insert(v).second) q.push(v);
  }
  return true;
}

}  // namespace kladder

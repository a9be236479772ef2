#include "kladder/canon.hpp"

#include <algorithm>
#include <unordered_map>

#include "kladder/errors.hpp"

namespace kladder {
namespace {

struct CanonSearch {
  int n;
  std::vector<std::vector<int>> adj;  // compacted 0..n-1
  std::vector<int> init_color;        // semantic colors (recorded in the key)
  std::string best;
  bool have_best = false;

  // 1-WL refinement; colors are canonical ranks so cell order is invariant.
  std::vector<int> refine(std::vector<int> color) const {
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; v++) {
        std::vector<int> s{color[v]};
        std::vector<int> nb;
        for (int u : adj[v]) nb.push_back(color[u]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sig[v] = {std::move(s), v};
      }
      auto order = sig;
      std::sort(order.begin(), order.end());
      std::vector<int> next(n);
      int c = -1;
      for (int i = 0; i < n; i++) {
        if (i == 0 || order[i].first != order[i - 1].first) c++;
        next[order[i].second] = c;
      }
      if (next == color) return color;
      color = std::move(next);
    }
  }

  std::string encode(const std::vector<int>& perm) const {
    // perm[i] = original compact id placed at position i
    std::vector<int> pos(n);
    for (int i = 0; i < n; i++) pos[perm[i]] = i;
    std::string s;
    s.push_back(static_cast<char>(n));
    int bits = 0, nb = 0;
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++) {
        bits <<= 1;
        if (std::binary_search(adj[perm[i]].begin(), adj[perm[i]].end(), perm[j])) bits |= 1;
        if (++nb == 8) {
          s.push_back(static_cast<char>(bits));
          bits = nb = 0;
        }
      }
    if (nb) s.push_back(static_cast<char>(bits << (8 - nb)));
    for (int i = 0; i < n; i++) {
      int c = init_color[perm[i]];
      s.push_back(static_cast<char>(c & 0xff));
      s.push_back(static_cast<char>((c >> 8) & 0xff));
    }
    return s;
  }

  void search(const std::vector<int>& color) {
    // find the first non-singleton cell (cells ordered by color rank)
    std::vector<std::vector<int>> cells;
    int maxc = 0;
    for (int v = 0; v < n; v++) maxc = std::max(maxc, color[v]);
    cells.assign(maxc + 1, {});
    for (int v = 0; v < n; v++) cells[color[v]].push_back(v);
    int target = -1;
    for (int c = 0; c <= maxc; c++)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == -1) {
      std::vector<int> perm(n);
      for (int v = 0; v < n; v++) perm[color[v]] = v;
      std::string cand = encode(perm);
      if (!have_best || cand < best) {
        best = std::move(cand);
        have_best = true;
      }
      return;
    }
    // individualize each cell member; skip twins of already-tried vertices
    // (swapping two twins is an automorphism, so branches coincide)
    std::vector<int> tried;
    for (int v : cells[target]) {
      bool twin = false;
      for (int w : tried) {
        auto nv = adj[v], nw = adj[w];
        std::erase(nv, w);
        std::erase(nw, v);
        if (nv == nw) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);
      std::vector<int> c2 = color;
      for (int u = 0; u < n; u++)
        if (c2[u] > target || (c2[u] == target && u != v)) c2[u]++;
      search(refine(c2));
    }
  }
};

std::string canon_impl(const Graph& g, const std::map<int, int>& colors) {
  check_size(g.num_vertices(), 16, "canonical_form");
  CanonSearch cs;
  auto vs = g.vertices();
  cs.n = static_cast<int>(vs.size());
  std::map<int, int> compact;
  for (int i = 0; i < cs.n; i++) compact[vs[i]] = i;
  cs.adj.assign(cs.n, {});
  cs.init_color.assign(cs.n, 0);
  for (int i = 0; i < cs.n; i++) {
    for (int u : g.neighbors(vs[i])) cs.adj[i].push_back(compact[u]);
    std::sort(cs.adj[i].begin(), cs.adj[i].end());
    auto it = colors.find(vs[i]);
    if (it != colors.end()) cs.init_color[i] = it->second;
  }
  if (cs.n == 0) return std::string(1, '\0');
  // initial partition: semantic color first, then refine
  std::vector<int> ranks = cs.init_color;
  std::vector<int> sorted_colors(ranks);
  std::sort(sorted_colors.begin(), sorted_colors.end());
  sorted_colors.erase(std::unique(sorted_colors.begin(), sorted_colors.end()),
                      sorted_colors.end());
  for (int& c : ranks)
    c = static_cast<int>(std::lower_bound(sorted_colors.begin(), sorted_colors.end(), c) -
                         sorted_colors.begin());
  cs.search(cs.refine(ranks));
  return cs.best;
}

// Solver sweeps re-canonicalize the same graphs constantly; keep a bounded
// memo for the uncolored case.
std::unordered_map<std::string, std::string>& canon_memo() {
  static std::unordered_map<std::string, std::string> memo;
  return memo;
}

std::string raw_encoding(const Graph& g) {
  std::string s;
  for (int u : g.vertices()) {
    s += std::to_string(u);
    s.push_back(':');
    for (int v : g.neighbors(u)) {
      s += std::to_string(v);
      s.push_back(',');
    }
    s.push_back(';');
  }
  return s;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  auto& memo = canon_memo();
  std::string key = raw_encoding(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::string out = canon_impl(g, {});
  if (memo.size() >= (1u << 22)) memo.clear();
  memo.emplace(std::move(key), out);
  return out;
}

std::string canonical_form_colored(const Graph& g, const std::map<int, int>& colors) {
  return canon_impl(g, colors);
}

}  // namespace kladder

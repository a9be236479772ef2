#include "kladder/params.hpp"

#include <algorithm>
#include <unordered_map>

#include "kladder/canon.hpp"
#include "kladder/errors.hpp"

namespace kladder {

int ParamValue::finite() const {
  if (inf_) throw ValidationError("ParamValue: infinite value has no finite part");
  return v_;
}

// --- treedepth oracle -------------------------------------------------------

namespace {

int td_oracle_impl(const Graph& g, std::unordered_map<std::string, int>& memo) {
  if (g.empty()) return 0;
  std::string key = canonical_form(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int best;
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    best = 0;
    for (auto& c : comps) best = std::max(best, td_oracle_impl(g.induced(c), memo));
  } else {
    best = g.num_vertices();
    for (int u : g.vertices())
      best = std::min(best, 1 + td_oracle_impl(g.remove_vertex(u), memo));
  }
  memo[key] = best;
  return best;
}

}  // namespace

ParamValue treedepth_oracle(const Graph& g) {
  check_size(g.num_vertices(), 12, "treedepth_oracle");
  static std::unordered_map<std::string, int> memo;
  if (memo.size() >= (1u << 22)) memo.clear();
  return td_oracle_impl(g, memo);
}

// --- treewidth oracle (elimination-order DP over subsets) -------------------

ParamValue treewidth_oracle(const Graph& g) {
  check_size(g.num_vertices(), 12, "treewidth_oracle");
  if (g.empty()) return ParamValue(-1);
  auto vs = g.vertices();
  int n = static_cast<int>(vs.size());
  std::vector<unsigned> adj(n, 0);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (i != j && g.has_edge(vs[i], vs[j])) adj[i] |= 1u << j;
  // q(S, v) = #vertices outside S u {v} reachable from v through S
  auto q = [&](unsigned S, int v) {
    unsigned seen = 1u << v, frontier = 1u << v;
    while (frontier) {
      unsigned next = 0;
      for (int i = 0; i < n; i++)
        if (frontier & (1u << i)) next |= adj[i] & ~seen;
      seen |= next;
      frontier = next & S;  // only walk onward through S
    }
    return __builtin_popcount(seen & ~S & ~(1u << v));
  };
  std::vector<int> tw(1u << n, 0);
  tw[0] = -1;
  for (unsigned S = 1; S < (1u << n); S++) {
    int best = n;
    for (int v = 0; v < n; v++)
      if (S & (1u << v)) {
        unsigned rest = S & ~(1u << v);
        best = std::min(best, std::max(q(rest, v), tw[rest]));
      }
    tw[S] = best;
  }
  return ParamValue(tw[(1u << n) - 1]);
}

// --- clique-sum splits ------------------------------------------------------

std::vector<CliqueSumSplit> clique_sum_splits(const Graph& g, int k, bool infinite_k) {
  auto vs = g.vertices();
  int n = static_cast<int>(vs.size());
  int bound = infinite_k ? n : std::min(k, n);  // |S| < bound
  std::vector<CliqueSumSplit> out;
  for (unsigned mask = 0; mask < (1u << n); mask++) {
    if (__builtin_popcount(mask) >= bound) continue;
    std::vector<int> sep;
    for (int i = 0; i < n; i++)
      if (mask & (1u << i)) sep.push_back(vs[i]);
    auto comps = connected_components(g.remove_vertices(sep));
    int c = static_cast<int>(comps.size());
    if (c < 2) continue;
    // bipartitions of components; comps[0] stays on side1 to avoid mirrors
    for (unsigned bm = 0; bm < (1u << (c - 1)); bm++) {
      std::vector<int> s1 = comps[0], s2;
      for (int i = 1; i < c; i++) {
        if (bm & (1u << (i - 1)))
          s1 = sorted_union(s1, comps[i]);
        else
          s2 = sorted_union(s2, comps[i]);
      }
      if (s2.empty()) continue;
      out.push_back({sep, s1, s2});
    }
  }
  // deterministic order: by separator size, then separator, then side1
  std::sort(out.begin(), out.end(), [](const CliqueSumSplit& a, const CliqueSumSplit& b) {
    if (a.sep.size() != b.sep.size()) return a.sep.size() < b.sep.size();
    if (a.sep != b.sep) return a.sep < b.sep;
    return a.side1 < b.side1;
  });
  return out;
}

// --- td_k solver ------------------------------------------------------------

namespace {

// The recursion splits one component at a time: for separator S, the children
// are g[S u C] + clique(S) over components C of g-S. The finest split
// dominates every bipartition because each bipartition side is an induced
// supergraph of its children and td_k is minor-monotone.
struct TdkSolver {
  int k;
  std::unordered_map<std::string, int> memo;

  std::vector<std::vector<int>> separators(const Graph& g) const {
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    int bound = std::min(k, n);  // |S| < bound
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); mask++) {
      if (__builtin_popcount(mask) >= bound) continue;
      std::vector<int> sep;
      for (int i = 0; i < n; i++)
        if (mask & (1u << i)) sep.push_back(vs[i]);
      if (connected_components(g.remove_vertices(sep)).size() >= 2) out.push_back(sep);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

  Graph child(const Graph& g, const std::vector<int>& sep, const std::vector<int>& comp) const {
    return g.induced(sorted_union(sep, comp)).with_clique(sep);
  }

  int solve(const Graph& g) {
    if (g.empty()) return 0;
    std::string key = canonical_form(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = g.num_vertices();
    for (int u : g.vertices()) best = std::min(best, 1 + solve(g.remove_vertex(u)));
    for (auto& sep : separators(g)) {
      int worst = 0;
      for (auto& comp : connected_components(g.remove_vertices(sep)))
        worst = std::max(worst, solve(child(g, sep, comp)));
      best = std::min(best, worst);
    }
    memo[key] = best;
    return best;
  }

  TreeDecomposition witness(const Graph& g) {
    if (g.empty()) return TreeDecomposition::single_bag({});
    int v = solve(g);
    for (int u : g.vertices()) {
      Graph g2 = g.remove_vertex(u);
      if (1 + solve(g2) == v) {
        TreeDecomposition w = witness(g2);
        for (auto& [x, b] : w.bags) b = sorted_union(b, {u});
        return w;
      }
    }
    for (auto& sep : separators(g)) {
      auto comps = connected_components(g.remove_vertices(sep));
      int worst = 0;
      for (auto& comp : comps) worst = std::max(worst, solve(child(g, sep, comp)));
      if (worst != v) continue;
      // chain the children's witnesses through nodes whose bags contain S
      TreeDecomposition acc;
      int next_id = 0, prev_link = -1;
      for (auto& comp : comps) {
        TreeDecomposition w = witness(child(g, sep, comp));
        std::map<int, int> relabel;
        for (int x : w.tree.vertices()) relabel[x] = next_id++;
        for (int x : w.tree.vertices()) {
          acc.tree = acc.tree.with_vertex(relabel[x]);
          acc.bags[relabel[x]] = w.bag(x);
        }
        for (auto [x, y] : w.tree.edges())
          acc.tree = acc.tree.with_edge(relabel[x], relabel[y]);
        int link = -1;  // first node whose bag contains the separator clique
        for (int x : w.tree.vertices())
          if (is_subset(sep, w.bag(x))) {
            link = relabel[x];
            break;
          }
        if (link < 0) throw std::logic_error("k_treedepth witness: no bag covers S");
        if (prev_link >= 0) acc.tree = acc.tree.with_edge(prev_link, link);
        prev_link = link;
      }
      return acc;
    }
    throw std::logic_error("k_treedepth witness: no move matches the optimum");
  }
};

}  // namespace

std::pair<ParamValue, TreeDecomposition> k_treedepth(const Graph& g, int k) {
  if (k < 1) throw ValidationError("k_treedepth: k must be >= 1");
  check_size(g.num_vertices(), 10, "k_treedepth");
  TdkSolver solver{k};
  int v = solver.solve(g);
  return {ParamValue(v), solver.witness(g)};
}

// --- pd_k solver ------------------------------------------------------------

namespace {

// Anchored recursion: pd(g, L, R) is 1 + the minimum width of a k-dismantable
// path decomposition whose first bag contains L and last bag contains R.
// Moves: delete a vertex (drop it from the anchors), or split at a separator
// S with |S| < k handing (L, S) to the left part and (S, R) to the right.
struct PdkSolver {
  int k;
  std::unordered_map<std::string, int> memo;

  static std::string key_of(const Graph& g, const std::vector<int>& l,
                            const std::vector<int>& r) {
    std::map<int, int> colors;
    for (int u : l) colors[u] += 1;
    for (int u : r) colors[u] += 2;
    return canonical_form_colored(g, colors);
  }

  struct Split {
    std::vector<int> sep, left, right;  // left/right exclude sep
  };

  std::vector<Split> splits(const Graph& g, const std::vector<int>& l,
                            const std::vector<int>& r) const {
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    int bound = std::min(k, n);
    std::vector<Split> out;
    for (unsigned mask = 0; mask < (1u << n); mask++) {
      if (__builtin_popcount(mask) >= bound) continue;
      std::vector<int> sep;
      for (int i = 0; i < n; i++)
        if (mask & (1u << i)) sep.push_back(vs[i]);
      auto comps = connected_components(g.remove_vertices(sep));
      int c = static_cast<int>(comps.size());
      if (c < 2) continue;
      for (unsigned bm = 1; bm < (1u << c) - 1; bm++) {
        std::vector<int> s1, s2;
        for (int i = 0; i < c; i++)
          if (bm & (1u << i))
            s1 = sorted_union(s1, comps[i]);
          else
            s2 = sorted_union(s2, comps[i]);
        if (!is_subset(l, sorted_union(s1, sep))) continue;
        if (!is_subset(r, sorted_union(s2, sep))) continue;
        out.push_back({sep, s1, s2});
      }
    }
    std::sort(out.begin(), out.end(), [](const Split& a, const Split& b) {
      if (a.sep.size() != b.sep.size()) return a.sep.size() < b.sep.size();
      if (a.sep != b.sep) return a.sep < b.sep;
      return a.left < b.left;
    });
    return out;
  }

  Graph part(const Graph& g, const std::vector<int>& sep, const std::vector<int>& side) const {
    return g.induced(sorted_union(sep, side)).with_clique(sep);
  }

  int solve(const Graph& g, const std::vector<int>& l, const std::vector<int>& r) {
    if (g.empty()) return 0;
    std::string key = key_of(g, l, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = g.num_vertices();
    for (int u : g.vertices())
      best = std::min(best, 1 + solve(g.remove_vertex(u), sorted_difference(l, {u}),
                                      sorted_difference(r, {u})));
    for (auto& sp : splits(g, l, r)) {
      int cand = std::max(solve(part(g, sp.sep, sp.left), l, sp.sep),
                          solve(part(g, sp.sep, sp.right), sp.sep, r));
      best = std::min(best, cand);
    }
    memo[key] = best;
    return best;
  }

  // Path decomposition as an ordered bag list; converted to a tree at the top.
  std::vector<std::vector<int>> witness(const Graph& g, const std::vector<int>& l,
                                        const std::vector<int>& r) {
    if (g.empty()) return {{}};
    int v = solve(g, l, r);
    for (int u : g.vertices()) {
      auto l2 = sorted_difference(l, {u}), r2 = sorted_difference(r, {u});
      Graph g2 = g.remove_vertex(u);
      if (1 + solve(g2, l2, r2) == v) {
        auto bags = witness(g2, l2, r2);
        for (auto& b : bags) b = sorted_union(b, {u});
        return bags;
      }
    }
    for (auto& sp : splits(g, l, r)) {
      Graph gl = part(g, sp.sep, sp.left), gr = part(g, sp.sep, sp.right);
      if (std::max(solve(gl, l, sp.sep), solve(gr, sp.sep, r)) != v) continue;
      auto bl = witness(gl, l, sp.sep), br = witness(gr, sp.sep, r);
      bl.insert(bl.end(), br.begin(), br.end());
      return bl;
    }
    throw std::logic_error("k_pathdepth witness: no move matches the optimum");
  }
};

}  // namespace

std::pair<ParamValue, TreeDecomposition> k_pathdepth(const Graph& g, int k) {
  if (k < 1) throw ValidationError("k_pathdepth: k must be >= 1");
  check_size(g.num_vertices(), 8, "k_pathdepth");
  PdkSolver solver{k};
  int v = solver.solve(g, {}, {});
  auto bags = solver.witness(g, {}, {});
  TreeDecomposition d;
  for (size_t i = 0; i < bags.size(); i++) {
    d.tree = d.tree.with_vertex(static_cast<int>(i));
    if (i > 0) d.tree = d.tree.with_edge(static_cast<int>(i) - 1, static_cast<int>(i));
    d.bags[static_cast<int>(i)] = bags[i];
  }
  return {ParamValue(v), d};
}

// --- p_word -----------------------------------------------------------------

namespace {

ParamValue p_word_impl(const Graph& g, const SigmaWord& w, size_t i,
                       std::unordered_map<std::string, ParamValue>& memo) {
  if (i == 0) return g.empty() ? ParamValue(0) : ParamValue::infinity();
  std::string key = canonical_form(g) + "#" + std::to_string(i);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const SigmaLetter& letter = w[i - 1];
  ParamValue best = p_word_impl(g, w, i - 1, memo);  // skip the letter
  if (letter.kind == SigmaLetter::A) {
    for (int u : g.vertices())
      best = ParamValue::min(best, p_word_impl(g.remove_vertex(u), w, i - 1, memo) + 1);
  } else {
    bool inf = letter.kind == SigmaLetter::SInf;
    for (auto& sp : clique_sum_splits(g, letter.k, inf)) {
      Graph g1 = g.induced(sorted_union(sp.sep, sp.side1)).with_clique(sp.sep);
      Graph g2 = g.induced(sorted_union(sp.sep, sp.side2)).with_clique(sp.sep);
      best = ParamValue::min(best, ParamValue::max(p_word_impl(g1, w, i, memo),
                                                   p_word_impl(g2, w, i, memo)));
    }
  }
  memo[key] = best;
  return best;
}

}  // namespace

ParamValue p_word(const Graph& g, const SigmaWord& w) {
  check_size(g.num_vertices(), 9, "p_word");
  std::unordered_map<std::string, ParamValue> memo;
  return p_word_impl(g, w, w.size(), memo);
}

// --- p_regex ----------------------------------------------------------------

namespace {

struct PRegexSolver {
  SigmaNfa nfa;
  std::vector<std::vector<int>> out_edges;  // state -> edge indices
  std::unordered_map<std::string, ParamValue> memo;

  explicit PRegexSolver(const SigmaRegex& r) : nfa(compile_reversed(r)) {
    out_edges.assign(nfa.num_states, {});
    for (size_t i = 0; i < nfa.edges.size(); i++)
      out_edges[nfa.edges[i].from].push_back(static_cast<int>(i));
  }

  // Every letter may be skipped (p_L equals p over the downward closure of L,
  // by Higman monotonicity), so the zero-cost closure follows *all*
  // transitions, labelled or not.
  std::vector<int> closure(const std::vector<int>& q) const {
    std::vector<bool> seen(nfa.num_states, false);
    std::vector<int> stack = q, out;
    for (int s : q) seen[s] = true;
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      out.push_back(s);
      for (int ei : out_edges[s])
        if (!seen[nfa.edges[ei].to]) {
          seen[nfa.edges[ei].to] = true;
          stack.push_back(nfa.edges[ei].to);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ParamValue value(const Graph& g, const std::vector<int>& q) {
    std::vector<int> reach = closure(q);
    bool accepting = std::binary_search(reach.begin(), reach.end(), nfa.accept);
    if (g.empty()) return accepting ? ParamValue(0) : ParamValue::infinity();
    std::string key = canonical_form(g) + "#";
    for (int s : reach) key += std::to_string(s) + ",";
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = ParamValue::infinity();  // cycle guard; states only shrink g
    ParamValue best = ParamValue::infinity();
    for (int s : reach)
      for (int ei : out_edges[s]) {
        const auto& e = nfa.edges[ei];
        if (e.eps) continue;
        if (e.letter.kind == SigmaLetter::A) {
          for (int u : g.vertices())
            best = ParamValue::min(best, value(g.remove_vertex(u), {e.to}) + 1);
        } else {
          bool inf = e.letter.kind == SigmaLetter::SInf;
          // children keep the pre-transition state: they may split again at
          // the same letter before consuming it
          for (auto& sp : clique_sum_splits(g, e.letter.k, inf)) {
            Graph g1 = g.induced(sorted_union(sp.sep, sp.side1)).with_clique(sp.sep);
            Graph g2 = g.induced(sorted_union(sp.sep, sp.side2)).with_clique(sp.sep);
            best = ParamValue::min(best,
                                   ParamValue::max(value(g1, {s}), value(g2, {s})));
          }
        }
      }
    memo[key] = best;
    return best;
  }
};

}  // namespace

ParamValue p_regex(const Graph& g, const SigmaRegex& r) {
  check_size(g.num_vertices(), 9, "p_regex");
  PRegexSolver solver(r);
  return solver.value(g, {solver.nfa.start});
}

}  // namespace kladder

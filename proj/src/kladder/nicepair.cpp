#include "kladder/nicepair.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
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

bool sorted_set(const std::vector<int>& xs) {
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i] >= xs[i + 1]) return false;
  return true;
}

// G[B] with every edge between two core vertices removed.
Graph member_graph(const GoodPair& gp, const std::vector<int>& b) {
  Graph gb = gp.graph.induced(b);
  std::vector<int> w = sorted_intersection(gp.u, b);
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (gb.has_edge(w[i], w[j])) gb = gb.remove_edge(w[i], w[j]);
  return gb;
}

}  // namespace

Report validate_good_pair(const GoodPair& gp) {
  if (gp.u.empty()) return std::string("good pair: U is empty");
  if (!sorted_set(gp.u)) return std::string("good pair: U is not a sorted set");
  for (int v : gp.u)
    if (!gp.graph.has_vertex(v))
      return "good pair: U contains non-vertex " + std::to_string(v);
  for (size_t i = 0; i < gp.b_family.size(); ++i) {
    const auto& b = gp.b_family[i];
    if (!sorted_set(b))
      return "good pair: member " + std::to_string(i) + " is not a sorted set";
    for (int v : b)
      if (!gp.graph.has_vertex(v))
        return "good pair: member " + std::to_string(i) + " contains non-vertex " +
               std::to_string(v);
  }
  for (size_t i = 0; i < gp.b_family.size(); ++i)
    for (size_t j = i + 1; j < gp.b_family.size(); ++j) {
      auto shared = sorted_intersection(sorted_difference(gp.b_family[i], gp.u),
                                        sorted_difference(gp.b_family[j], gp.u));
      if (!shared.empty())
        return "good pair: members " + std::to_string(i) + " and " + std::to_string(j) +
               " overlap outside U at " + join(shared);
    }
  for (int v : gp.graph.vertices()) {
    bool covered = sorted_contains(gp.u, v);
    for (const auto& b : gp.b_family) covered = covered || sorted_contains(b, v);
    if (!covered) return "good pair: vertex " + std::to_string(v) + " is uncovered";
  }
  for (auto [a, c] : gp.graph.edges()) {
    bool covered = sorted_contains(gp.u, a) && sorted_contains(gp.u, c);
    for (const auto& b : gp.b_family)
      covered = covered || (sorted_contains(b, a) && sorted_contains(b, c));
    if (!covered)
      return "good pair: edge " + std::to_string(a) + "-" + std::to_string(c) +
             " is uncovered";
  }
  return std::nullopt;
}

Graph torso(const GoodPair& gp) {
  Graph t = gp.graph.induced(gp.u);
  for (const auto& b : gp.b_family) t = t.with_clique(sorted_intersection(gp.u, b));
  return t;
}

Report check_nice_pair(const GoodPair& gp) {
  if (auto r = validate_good_pair(gp)) return r;
  for (size_t m = 0; m < gp.b_family.size(); ++m) {
    const auto& b = gp.b_family[m];
    std::vector<int> w = sorted_intersection(gp.u, b);
    int c = static_cast<int>(w.size());
    check_size(c, 10, "nice-pair core");
    Graph gb = member_graph(gp, b);
    auto fail = [&](const std::vector<int>& z1, const std::vector<int>& z2,
                    int got) -> Report {
      return "member " + std::to_string(m) + ": only " + std::to_string(got) +
             " disjoint paths between Z1=" + join(z1) + " and Z2=" + join(z2);
    };
    // Maximal splits: each core vertex goes to Z1, Z2, or both.
    std::vector<int> asg(c, 0);
    bool done = c == 0;
    while (!done) {
      std::vector<int> z1, z2;
      for (int i = 0; i < c; ++i) {
        if (asg[i] != 1) z1.push_back(w[i]);
        if (asg[i] != 0) z2.push_back(w[i]);
      }
      if (z1.size() == z2.size()) {
        int got = max_disjoint_paths(gb, z1, z2).count;
        if (got < static_cast<int>(z1.size())) return fail(z1, z2, got);
      }
      int i = 0;
      while (i < c && asg[i] == 2) asg[i++] = 0;
      if (i == c) done = true;
      else ++asg[i];
    }
    if (c <= 6) {
      for (int m1 = 0; m1 < (1 << c); ++m1)
        for (int m2 = 0; m2 < (1 << c); ++m2) {
          if (__builtin_popcount(m1) != __builtin_popcount(m2)) continue;
          std::vector<int> z1, z2;
          for (int i = 0; i < c; ++i) {
            if (m1 & (1 << i)) z1.push_back(w[i]);
            if (m2 & (1 << i)) z2.push_back(w[i]);
          }
          int got = max_disjoint_paths(gb, z1, z2).count;
          if (got < static_cast<int>(z1.size())) return fail(z1, z2, got);
        }
    }
  }
  return std::nullopt;
}

bool is_nice_pair(const GoodPair& gp) { return !check_nice_pair(gp).has_value(); }

GoodPair restrict_pair(const GoodPair& gp, const std::vector<int>& x_set) {
  if (auto r = validate_good_pair(gp)) throw ValidationError(*r);
  if (!sorted_set(x_set)) throw ValidationError("restrict: X is not a sorted set");
  if (!is_subset(x_set, gp.u)) throw ValidationError("restrict: X must be a subset of U");
  std::vector<int> nu = sorted_difference(gp.u, x_set);
  if (nu.empty()) throw ValidationError("restrict: X removes all of U");
  GoodPair out;
  out.graph = gp.graph.remove_vertices(x_set);
  out.u = nu;
  for (const auto& b : gp.b_family) {
    auto nb = sorted_difference(b, x_set);
    if (!nb.empty()) out.b_family.push_back(nb);
  }
  if (auto r = validate_good_pair(out))
    throw std::logic_error("restrict: invalid result: " + *r);
  if (!(torso(out) == torso(gp).remove_vertices(x_set)))
    throw std::logic_error("restrict: torso mismatch");
  return out;
}

std::vector<PathSeq> project_paths_to_torso(const GoodPair& gp,
                                            const std::vector<PathSeq>& paths) {
  if (auto r = validate_good_pair(gp)) throw ValidationError(*r);
  Graph t = torso(gp);
  std::set<int> used;
  std::vector<PathSeq> out;
  for (const auto& p : paths) {
    if (p.empty() || !is_valid_path(gp.graph, p))
      throw ValidationError("project: input is not a path of the graph");
    for (int v : p)
      if (!used.insert(v).second) throw ValidationError("project: paths overlap");
    if (!sorted_contains(gp.u, p.front()) || !sorted_contains(gp.u, p.back()))
      throw ValidationError("project: path endpoints must lie in U");
    PathSeq tr;
    for (int v : p)
      if (sorted_contains(gp.u, v)) tr.push_back(v);
    for (size_t i = 0; i + 1 < tr.size(); ++i)
      if (!t.has_edge(tr[i], tr[i + 1]))
        throw std::logic_error("project: trace pair not torso-adjacent");
    out.push_back(std::move(tr));
  }
  return out;
}

std::vector<PathSeq> lift_paths_from_torso(const GoodPair& gp,
                                           const std::vector<PathSeq>& torso_paths) {
  if (auto r = validate_good_pair(gp)) throw ValidationError(*r);
  Graph t = torso(gp);
  std::set<int> input_verts;
  for (const auto& p : torso_paths) {
    if (p.empty() || !is_valid_path(t, p))
      throw ValidationError("lift: input is not a torso path");
    for (int v : p)
      if (!input_verts.insert(v).second) throw ValidationError("lift: input paths overlap");
  }

  std::vector<PathSeq> cur = torso_paths;
  for (const auto& b : gp.b_family) {
    std::vector<int> w = sorted_intersection(gp.u, b);
    if (w.size() < 2) continue;
    // Collapse each maximal run of consecutive core vertices to its two ends;
    // a collapsed pair with no underlying edge needs a connector through B.
    std::vector<std::pair<int, int>> assigned;
    for (auto& p : cur) {
      PathSeq np;
      size_t i = 0;
      while (i < p.size()) {
        if (!sorted_contains(w, p[i])) {
          np.push_back(p[i]);
          ++i;
          continue;
        }
        size_t j = i;
        while (j + 1 < p.size() && sorted_contains(w, p[j + 1])) ++j;
        np.push_back(p[i]);
        if (j > i) {
          np.push_back(p[j]);
          if (!gp.graph.has_edge(p[i], p[j])) assigned.emplace_back(p[i], p[j]);
        }
        i = j + 1;
      }
      p = std::move(np);
    }
    if (assigned.empty()) continue;

    // Core vertices not on an assigned pair are protected: padding them on
    // both sides forces them into singleton paths, so the connectors avoid
    // them.
    std::set<int> pair_ends;
    for (auto [x, y] : assigned) {
      pair_ends.insert(x);
      pair_ends.insert(y);
    }
    std::vector<int> z1s, z2s;
    for (int v : w)
      if (!pair_ends.count(v)) {
        z1s.push_back(v);
        z2s.push_back(v);
      }
    for (auto [x, y] : assigned) {
      z1s.push_back(x);
      z2s.push_back(y);
    }
    std::sort(z1s.begin(), z1s.end());
    std::sort(z2s.begin(), z2s.end());
    Graph gb = member_graph(gp, b);
    MengerResult mr = max_disjoint_paths(gb, z1s, z2s);
    int need = static_cast<int>(w.size()) - static_cast<int>(assigned.size());
    if (mr.count < need)
      throw ValidationError("lift: member " + join(b) + " is not nice: only " +
                            std::to_string(mr.count) + " connectors for Z1=" + join(z1s) +
                            ", Z2=" + join(z2s));
    std::map<int, PathSeq> conn;  // connector keyed by its start
    for (const auto& q : mr.paths)
      if (q.size() >= 2) conn[q.front()] = q;
    if (conn.size() != assigned.size())
      throw std::logic_error("lift: connector count mismatch");

    // Rewire: cut the assigned pairs, insert connectors, and retrace from
    // each path start. Connectors may permute the pair ends; the functional
    // successor map reconciles that, dropping any leftover cycles.
    std::map<int, int> next;
    auto set_next = [&next](int a, int b2) {
      if (!next.emplace(a, b2).second) throw std::logic_error("lift: successor clash");
    };
    std::vector<int> starts;
    for (const auto& p : cur) {
      starts.push_back(p.front());
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        auto pr = std::make_pair(p[i], p[i + 1]);
        if (std::find(assigned.begin(), assigned.end(), pr) == assigned.end())
          set_next(p[i], p[i + 1]);
      }
    }
    for (auto [x, y] : assigned) {
      auto it = conn.find(x);
      if (it == conn.end()) throw std::logic_error("lift: missing connector");
      const PathSeq& q = it->second;
      for (size_t i = 0; i + 1 < q.size(); ++i) set_next(q[i], q[i + 1]);
    }
    std::vector<PathSeq> out;
    std::set<int> visited;
    for (int s : starts) {
      if (!visited.insert(s).second) throw std::logic_error("lift: start revisited");
      PathSeq p{s};
      int v = s;
      while (true) {
        auto it = next.find(v);
        if (it == next.end()) break;
        v = it->second;
        if (!visited.insert(v).second) throw std::logic_error("lift: walk revisits a vertex");
        p.push_back(v);
      }
      out.push_back(std::move(p));
    }
    cur = std::move(out);
  }

  std::set<int> used;
  std::vector<int> in1, in2, out1, out2;
  for (const auto& p : torso_paths) {
    in1.push_back(p.front());
    in2.push_back(p.back());
  }
  for (const auto& p : cur) {
    if (!is_valid_path(gp.graph, p)) throw std::logic_error("lift: produced a non-path");
    for (int v : p) {
      if (!used.insert(v).second) throw std::logic_error("lift: produced overlapping paths");
      if (sorted_contains(gp.u, v) && !input_verts.count(v))
        throw std::logic_error("lift: U-trace left the input vertex set");
    }
    out1.push_back(p.front());
    out2.push_back(p.back());
  }
  std::sort(in1.begin(), in1.end());
  std::sort(in2.begin(), in2.end());
  std::sort(out1.begin(), out1.end());
  std::sort(out2.begin(), out2.end());
  if (in1 != out1 || in2 != out2) throw std::logic_error("lift: endpoints changed");
  return cur;
}

GoodPair compose_nice_pairs(const GoodPair& gp, const GoodPair& inner) {
  if (auto r = validate_good_pair(gp)) throw ValidationError("compose: outer: " + *r);
  if (!(inner.graph == torso(gp)))
    throw ValidationError("compose: inner pair is not over the outer torso");
  if (auto r = validate_good_pair(inner)) throw ValidationError("compose: inner: " + *r);
  std::vector<std::vector<int>> merged = inner.b_family;
  std::vector<std::vector<int>> standalone;
  for (const auto& b : gp.b_family) {
    std::vector<int> core = sorted_intersection(gp.u, b);
    if (is_subset(core, inner.u)) {
      standalone.push_back(b);
      continue;
    }
    bool placed = false;
    for (size_t j = 0; j < inner.b_family.size() && !placed; ++j)
      if (is_subset(core, inner.b_family[j])) {
        merged[j] = sorted_union(merged[j], b);
        placed = true;
      }
    if (!placed)
      throw ValidationError("compose: member core " + join(core) + " fits no inner member");
  }
  GoodPair out;
  out.graph = gp.graph;
  out.u = inner.u;
  out.b_family = std::move(merged);
  for (auto& b : standalone) out.b_family.push_back(std::move(b));
  if (auto r = validate_good_pair(out))
    throw std::logic_error("compose: invalid result: " + *r);
  if (!(torso(out) == torso(inner))) throw std::logic_error("compose: torso mismatch");
  return out;
}

}  // namespace kladder

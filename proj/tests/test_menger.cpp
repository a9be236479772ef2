#include <doctest.h>

#include <random>
#include <set>

#include "kladder/graph.hpp"
#include "kladder/menger.hpp"
#include "oracles.hpp"

using namespace kladder;

TEST_CASE("known path families") {
  Graph g = grid_graph(2, 3);
  MengerResult r = max_disjoint_paths(g, {0, 3}, {2, 5});
  CHECK(r.count == 2);
  CHECK(r.paths.size() == 2);
  CHECK(is_z_cut(g, {0, 3}, {2, 5}, r.cut));
  // the shared vertex becomes a singleton path and blocks the long route
  MengerResult s = max_disjoint_paths(path_graph(3), {0, 1}, {1, 2});
  CHECK(s.count == 1);
  CHECK(max_disjoint_paths(path_graph(3), {1}, {1}).count == 1);
}

TEST_CASE("disconnected pairs have empty families") {
  Graph g = Graph::on_vertices({0, 1});
  MengerResult r = max_disjoint_paths(g, {0}, {1});
  CHECK(r.count == 0);
  CHECK(r.cut.empty());
  CHECK(is_z_cut(g, {0}, {1}, {}));
}

TEST_CASE("duality and path validity on random instances") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + trial % 5;
    Graph g = kladder::testing::random_graph(rng, n, 0.45);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::set<int> z1s, z2s;
    for (int i = 0; i < 2 + trial % 2; ++i) {
      z1s.insert(pick(rng));
      z2s.insert(pick(rng));
    }
    std::vector<int> z1(z1s.begin(), z1s.end()), z2(z2s.begin(), z2s.end());
    MengerResult r = max_disjoint_paths(g, z1, z2);
    CHECK(r.count == static_cast<int>(r.paths.size()));
    CHECK(r.count == static_cast<int>(r.cut.size()));
    CHECK(is_z_cut(g, z1, z2, r.cut));
    std::set<int> used;
    for (const auto& p : r.paths) {
      CHECK(is_valid_path(g, p));
      CHECK(sorted_contains(z1, p.front()));
      CHECK(sorted_contains(z2, p.back()));
      for (int v : p) CHECK(used.insert(v).second);
    }
    // no smaller cut exists: every subset below the flow fails to cut
    if (r.count > 0 && n <= 7) {
      bool smaller = false;
      std::vector<int> verts = g.vertices();
      for (unsigned mask = 0; mask < (1u << n) && !smaller; ++mask) {
        if (__builtin_popcount(mask) != r.count - 1) continue;
        std::vector<int> cand;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) cand.push_back(verts[i]);
        if (is_z_cut(g, z1, z2, cand)) smaller = true;
      }
      CHECK(!smaller);
    }
  }
}

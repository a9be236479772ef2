#include <doctest.h>

#include <random>

#include "kladder/canon.hpp"
#include "kladder/graph.hpp"
#include "kladder/minors.hpp"
#include "oracles.hpp"

using namespace kladder;

TEST_CASE("minor models found and refuted") {
  auto m = find_minor_model(complete_graph(3), cycle_graph(5));
  REQUIRE(m.has_value());
  CHECK(!validate_model(*m));
  CHECK(!find_minor_model(complete_graph(4), cycle_graph(5)).has_value());
  CHECK(!find_minor_model(cycle_graph(3), path_graph(6)).has_value());
  auto grid = find_minor_model(cycle_graph(4), grid_graph(2, 2));
  CHECK(grid.has_value());
}

TEST_CASE("validate_model rejects broken models") {
  MinorModel m;
  m.pattern = complete_graph(2);
  m.host = path_graph(3);
  m.branch_sets[0] = {0};
  m.branch_sets[1] = {2};  // no realizing edge
  CHECK(validate_model(m));
  m.branch_sets[1] = {1, 2};
  CHECK(!validate_model(m));
  m.branch_sets[0] = {0, 1};  // overlap
  CHECK(validate_model(m));
  m.branch_sets[0] = {0, 2};  // disconnected (also overlapping removed)
  m.branch_sets[1] = {1};
  CHECK(validate_model(m));
}

TEST_CASE("erdos-szekeres witnesses verify") {
  auto w = erdos_szekeres({2, 1, 4, 3, 5}, 3, 3);
  REQUIRE(w.has_value());
  CHECK(w->indices.size() == 3);
  // no witness possible below the threshold
  CHECK(!erdos_szekeres({2, 1}, 3, 3).has_value());
  CHECK(!erdos_szekeres({2, 1, 4, 3}, 3, 3).has_value());
}

TEST_CASE("tree leaves or path dichotomy") {
  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  LeavesOrPath lp = tree_leaves_or_path(star, 3);
  CHECK(lp.leaves);
  CHECK(lp.witness.size() == 3);
  for (int v : lp.witness) CHECK(star.degree(v) == 1);
  LeavesOrPath lp2 = tree_leaves_or_path(path_graph(5), 4);
  CHECK(!lp2.leaves);
  CHECK(lp2.witness.size() == 4);
  CHECK(is_valid_path(path_graph(5), lp2.witness));
}

TEST_CASE("k-ladders and their validation") {
  std::vector<Graph> cols(4, path_graph(3));
  KLadder lad = make_k_ladder(3, 4, cols);
  CHECK(lad.graph == grid_graph(3, 4));
  CHECK(!validate_k_ladder(lad));
  CHECK(lad.row(1) == std::vector<int>({4, 5, 6, 7}));
  CHECK(lad.column(2) == std::vector<int>({2, 6, 10}));
  // star column
  Graph star3 = Graph::from_edges(3, {{1, 0}, {1, 2}});
  KLadder lad2 = make_k_ladder(3, 2, {star3, star3});
  CHECK(!validate_k_ladder(lad2));
}

TEST_CASE("pigeonholed tree-times-path from a ladder") {
  std::vector<Graph> cols(5, path_graph(2));
  KLadder lad = make_k_ladder(2, 5, cols);
  auto [tree, model] = tree_times_path_from_ladder(lad, 3);
  CHECK(!validate_model(model));
  CHECK(canonical_form(tree) == canonical_form(path_graph(2)));
  CHECK(model.pattern == cartesian_product(tree, path_graph(3)));
  CHECK(canonical_form(model.pattern) == canonical_form(grid_graph(2, 3)));
  CHECK(model.host == lad.graph);
}

TEST_CASE("private intervals on a planted instance") {
  Graph g = grid_graph(2, 4);
  PathSeq p = {0, 1, 2, 3};  // top row
  std::vector<std::vector<int>> subs = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};  // columns
  PrivateIntervals pi = private_intervals(g, p, subs, 3);
  CHECK(pi.members.size() >= 3);
  CHECK(pi.intervals.size() == pi.members.size());
  for (size_t j = 0; j + 1 < pi.intervals.size(); ++j)
    CHECK(pi.intervals[j].second < pi.intervals[j + 1].first);
}

TEST_CASE("ladder extraction on a clean grid") {
  Graph g = grid_graph(2, 4);
  std::vector<PathSeq> rows = {{0, 1, 2, 3}, {4, 5, 6, 7}};
  std::vector<std::vector<int>> connectors = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};
  auto [lad, model] = extract_ladder(g, rows, connectors);
  CHECK(lad.k == 2);
  CHECK(lad.l >= 3);
  CHECK(!validate_k_ladder(lad));
  CHECK(!validate_model(model));
  CHECK(model.pattern == lad.graph);
  CHECK(model.host == g);
}

TEST_CASE("tree-times-path minor search") {
  auto hit = has_minor_tree_times_path(grid_graph(3, 3), 2, 2);
  REQUIRE(hit.has_value());
  CHECK(!validate_model(hit->second));
  CHECK(canonical_form(hit->second.pattern) ==
        canonical_form(cartesian_product(hit->first, path_graph(2))));
  CHECK(!has_minor_tree_times_path(path_graph(5), 2, 2).has_value());
}

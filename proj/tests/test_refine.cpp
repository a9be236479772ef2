#include <doctest.h>

#include <random>

#include "kladder/errors.hpp"
#include "kladder/graph.hpp"
#include "kladder/refine.hpp"
#include "oracles.hpp"

using namespace kladder;

TEST_CASE("censuses and their order") {
  TreeDecomposition d;
  d.tree = Graph::from_edges(2, {{0, 1}});
  d.bags[0] = {0, 1, 2};
  d.bags[1] = {2, 3};
  auto c = bag_census(d, 4);
  CHECK(c == std::vector<long long>({0, 0, 1, 1, 0}));
  CHECK(census_compare({0, 2, 0}, {0, 0, 1}) < 0);
  CHECK(census_compare({5, 0, 1}, {0, 1, 1}) < 0);
  CHECK(census_compare(c, c) == 0);
  // k = 2: bags of size <= 1 are counted only next to an adhesion >= 2
  TreeDecomposition e;
  e.tree = Graph::from_edges(2, {{0, 1}});
  e.bags[0] = {0};
  e.bags[1] = {0, 1, 2};
  auto f = bag_census_filtered(e, 3, 2);
  CHECK(f == std::vector<long long>({0, 0, 0, 1}));
}

TEST_CASE("improvement step splits an unlinked pair") {
  Graph g = Graph::on_vertices({0, 1});
  TreeDecomposition d = TreeDecomposition::single_bag({0, 1});
  ImprovementResult res = improvement_step(g, {0, 1}, d, 0, 0, {0}, {1});
  CHECK(res.s_new == std::vector<int>({0, 1}));
  CHECK(res.z1 != res.z2);
  CHECK(res.d.bag(res.z1) == std::vector<int>{0});
  CHECK(res.d.bag(res.z2) == std::vector<int>{1});
  CHECK(!validate_gs_decomposition(g, res.s_new, res.d));
  CHECK(census_compare(bag_census(res.d, 2), bag_census(d, 2)) < 0);
}

TEST_CASE("improvement step rejects linked pairs") {
  Graph g = path_graph(2);
  TreeDecomposition d = TreeDecomposition::single_bag({0, 1});
  CHECK_THROWS_AS(
      (void)improvement_step(g, {0, 1}, d, 0, 0, {0}, {1}), ValidationError);
}

TEST_CASE("improvement step records the cut on the bridge") {
  Graph g = path_graph(3);  // 0-1-2, cutting at 1
  TreeDecomposition d = TreeDecomposition::single_bag({0, 1, 2});
  // {0},{2} is linked by one path; use size-2 sets that are not 2-linked
  ImprovementResult res = improvement_step(g, {0, 1, 2}, d, 0, 0, {0, 1}, {1, 2});
  std::vector<int> adh =
      sorted_intersection(res.d.bag(res.z1), res.d.bag(res.z2));
  CHECK(adh == std::vector<int>{1});
  CHECK(!validate_gs_decomposition(g, res.s_new, res.d));
}

TEST_CASE("unbreakable decompositions on standard graphs") {
  // a clique never splits
  TreeDecomposition d = unbreakable_decomposition(complete_graph(5), 3);
  CHECK(d.bags.size() == 1);
  CHECK(!verify_unbreakable(complete_graph(5), 3, d));
  // a path splits down to small bags for k = 2
  std::vector<RefineTrace> trace;
  Graph p = path_graph(5);
  TreeDecomposition dp = unbreakable_decomposition(p, 2, &trace);
  CHECK(!verify_unbreakable(p, 2, dp));
  CHECK(dp.adhesion() <= 1);
  CHECK(!trace.empty());
  for (const auto& t : trace)
    CHECK(census_compare(t.potential_after, t.potential_before) < 0);
}

TEST_CASE("unbreakable handles disconnected graphs") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  TreeDecomposition d = unbreakable_decomposition(g, 2);
  CHECK(!verify_unbreakable(g, 2, d));
}

TEST_CASE("good decomposition from a small anchor") {
  Graph g = path_graph(4);
  std::vector<RefineTrace> trace;
  auto [s, d] = good_gs_decomposition(g, {0, 1}, 2, 2, 3, &trace);
  CHECK(is_subset({0, 1}, s));
  CHECK(!verify_good_decomposition(g, s, 2, 2, 3, d));
  for (const auto& t : trace)
    CHECK(census_compare(t.potential_after, t.potential_before) < 0);
}

TEST_CASE("good decomposition accepts a supplied initial decomposition") {
  Graph g = path_graph(4);
  TreeDecomposition init;
  init.tree = Graph::from_edges(3, {{0, 1}, {1, 2}});
  init.bags[0] = {0, 1};
  init.bags[1] = {1, 2};
  init.bags[2] = {2, 3};
  auto [s, d] = good_gs_decomposition(g, g.vertices(), 2, 2, 2, nullptr, &init);
  CHECK(s == g.vertices());
  CHECK(!verify_good_decomposition(g, s, 2, 2, 2, d));
}

TEST_CASE("good decomposition validates its arguments") {
  Graph g = path_graph(4);
  CHECK_THROWS_AS((void)good_gs_decomposition(g, g.vertices(), 2, 1, 3), ValidationError);
  CHECK_THROWS_AS((void)good_gs_decomposition(g, g.vertices(), 2, 2, 2), ValidationError);
}

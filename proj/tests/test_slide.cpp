#include <doctest.h>

#include "kladder/canon.hpp"
#include "kladder/errors.hpp"
#include "kladder/graph.hpp"
#include "kladder/minors.hpp"
#include "kladder/slide.hpp"

using namespace kladder;

TEST_CASE("sliding validation catches each violation") {
  SlidingSequence s;
  s.pattern = path_graph(2);
  s.host = path_graph(3);
  s.injections = {{{0, 0}, {1, 1}}};
  CHECK(!validate_sliding(s));
  // moving two tokens at once
  SlidingSequence two = s;
  two.injections = {{{0, 0}, {1, 1}}, {{0, 1}, {1, 2}}};
  CHECK(validate_sliding(two));
  // unrealized pattern edge
  SlidingSequence far = s;
  far.injections = {{{0, 0}, {1, 2}}};
  CHECK(validate_sliding(far));
  // non-injective step
  SlidingSequence clash = s;
  clash.injections = {{{0, 0}, {1, 0}}};
  CHECK(validate_sliding(clash));
  // move along a non-edge
  SlidingSequence hop = s;
  hop.injections = {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}};
  hop.injections[1][1] = 1;  // no move at all counts as zero tokens moved
  CHECK(validate_sliding(hop));
}

TEST_CASE("a long path hosts the tokens statically") {
  SlidingSequence s = path_sliding_in_tree(path_graph(5), 3);
  CHECK(s.injections.size() == 1);
  CHECK(!validate_sliding(s));
}

TEST_CASE("a star forces a genuine shuttle") {
  // every tree on 5+ vertices contains P_3, so k=3 never shuttles; the
  // 7-vertex star has no P_4, forcing movement for k=4
  Graph star =
      Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
  SlidingSequence s = path_sliding_in_tree(star, 4);
  CHECK(s.injections.size() > 1);
  CHECK(!validate_sliding(s));
}

TEST_CASE("single token always works") {
  for (int n : {1, 2, 5}) {
    Graph t = n == 1 ? Graph::on_vertices({0}) : path_graph(n);
    SlidingSequence s = path_sliding_in_tree(t, 1);
    CHECK(!validate_sliding(s));
  }
}

TEST_CASE("too-small trees are rejected") {
  CHECK_THROWS_AS((void)path_sliding_in_tree(path_graph(2), 2), ValidationError);
  CHECK_THROWS_AS((void)path_sliding_in_tree(cycle_graph(4), 2), ValidationError);
}

TEST_CASE("static sequences compile to column models") {
  SlidingSequence s = path_sliding_in_tree(path_graph(3), 2);
  REQUIRE(s.injections.size() == 1);
  MinorModel m = sliding_to_model(s, 3);
  CHECK(!validate_model(m));
  CHECK(m.pattern == grid_graph(2, 3));
  CHECK(m.host == cartesian_product(path_graph(3), path_graph(3)));
  for (const auto& [x, set] : m.branch_sets) CHECK(set.size() == 1);
}

TEST_CASE("shuttle sequences compile to mirrored models") {
  Graph star =
      Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
  SlidingSequence s = path_sliding_in_tree(star, 4);
  REQUIRE(s.injections.size() > 1);
  MinorModel m = sliding_to_model(s, 2);
  CHECK(!validate_model(m));
  CHECK(m.pattern == grid_graph(4, 2));
}

TEST_CASE("grid-in-ladder end to end") {
  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  MinorModel m = grid_in_ladder(3, 2, star);
  CHECK(!validate_model(m));
  CHECK(m.pattern == grid_graph(3, 2));
  MinorModel one = grid_in_ladder(1, 3, path_graph(2));
  CHECK(!validate_model(one));
  CHECK(canonical_form(one.pattern) == canonical_form(path_graph(3)));
}

#pragma once

#include <string>
#include <vector>

#include "kladder/decomp.hpp"
#include "kladder/graph.hpp"

namespace kladder {

// Bag-size census: census[j] = number of bags of size j, j in 0..n. Compared
// lexicographically from the largest size down; every refinement move below
// strictly decreases the relevant census, which bounds the number of moves.
std::vector<long long> bag_census(const TreeDecomposition& d, int n);
// Filtered variant: a bag of size at most 3(k-1)/2 is counted only when some
// incident adhesion has size at least k.
std::vector<long long> bag_census_filtered(const TreeDecomposition& d, int n, int k);
// <0, 0, >0 comparing from size n downward.
int census_compare(const std::vector<long long>& a, const std::vector<long long>& b);

// One line of the refinement drivers' trace.
struct RefineTrace {
  std::string violation;
  std::vector<long long> potential_before, potential_after;
};

struct ImprovementResult {
  std::vector<int> s_new;  // S' = S u X
  TreeDecomposition d;
  // When x1 == x2: adjacent nodes with Z1 in bag(z1), Z2 in bag(z2) and
  // bag(z1) cap bag(z2) = X, a minimum (Z1,Z2)-cut. Otherwise -1.
  int z1 = -1, z2 = -1;
};

// One refinement exchange on a decomposition of (g, s): given equal-size
// Z1 in bag(x1), Z2 in bag(x2) that are not linked by |Z1| disjoint paths in
// g while every adhesion between x1 and x2 has size >= |Z1|, splits the tree
// into two overlaid copies along a minimum (Z1,Z2)-cut X chosen to minimize
// total distance-to-the-anchors. The plain census strictly decreases and the
// adhesion stays at most max(old, |Z1|-1).
ImprovementResult improvement_step(const Graph& g, const std::vector<int>& s,
                                   const TreeDecomposition& d, int x1, int x2,
                                   std::vector<int> z1, std::vector<int> z2);

// Decomposition of g with adhesion < k such that equal-size subsets (up to
// size k) of any single bag are always linked by that many disjoint paths,
// and, when g is connected, both sides of every tree edge induce connected
// subgraphs.
TreeDecomposition unbreakable_decomposition(const Graph& g, int k,
                                            std::vector<RefineTrace>* trace = nullptr);
Report verify_unbreakable(const Graph& g, int k, const TreeDecomposition& d);

// Decomposition of (g, S') for some S' containing s, with adhesion at most a
// and width below max(t, 3(k-1)/2), such that size-k subsets of bags are
// linked unless separated by a small adhesion (or hosted by a small loosely
// attached bag), and small adhesions under a large one are fully linked on
// their far side. Starts from the single bag s (requires |s| <= t) or from
// `initial` when given. Requires a >= k.
std::pair<std::vector<int>, TreeDecomposition> good_gs_decomposition(
    const Graph& g, const std::vector<int>& s, int k, int a, int t,
    std::vector<RefineTrace>* trace = nullptr, const TreeDecomposition* initial = nullptr);
Report verify_good_decomposition(const Graph& g, const std::vector<int>& s_prime, int k,
                                 int a, int t, const TreeDecomposition& d);

}  // namespace kladder

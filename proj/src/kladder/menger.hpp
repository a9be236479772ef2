#pragma once

#include <vector>

#include "kladder/graph.hpp"

namespace kladder {

// Max family of vertex-disjoint (Z1,Z2)-paths together with a matching
// minimum vertex cut, via unit-capacity vertex-split flow. A vertex in both
// Z1 and Z2 yields a one-vertex path.
struct MengerResult {
  int count = 0;
  std::vector<PathSeq> paths;  // pairwise vertex-disjoint
  std::vector<int> cut;        // sorted; |cut| == count
};

MengerResult max_disjoint_paths(const Graph& g, const std::vector<int>& z1,
                                const std::vector<int>& z2);

// True iff removing `cut` leaves no (Z1,Z2)-path (a vertex of Z1 cap Z2 not
// in the cut counts as a path).
bool is_z_cut(const Graph& g, const std::vector<int>& z1, const std::vector<int>& z2,
              const std::vector<int>& cut);

}  // namespace kladder

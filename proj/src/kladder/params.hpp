#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kladder/decomp.hpp"
#include "kladder/graph.hpp"
#include "kladder/sigma.hpp"

namespace kladder {

// Value in {-1, 0, 1, ...} union {infinity}. -1 occurs only as the width of
// an empty decomposition / treewidth of the empty graph; the parameters
// themselves are non-negative. Infinity is a distinguished sentinel.
class ParamValue {
 public:
  ParamValue() : inf_(true), v_(0) {}
  ParamValue(int v) : inf_(false), v_(v) {}
  static ParamValue infinity() { return ParamValue(); }

  bool is_infinite() const { return inf_; }
  int finite() const;

  ParamValue operator+(int d) const { return inf_ ? infinity() : ParamValue(v_ + d); }
  bool operator==(const ParamValue&) const = default;
  bool operator<(const ParamValue& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const ParamValue& o) const { return *this < o || *this == o; }

  static ParamValue min(ParamValue a, ParamValue b) { return a < b ? a : b; }
  static ParamValue max(ParamValue a, ParamValue b) { return a < b ? b : a; }

 private:
  bool inf_;
  int v_;
};

// Exact td_k with a k-dismantable witness of width td_k - 1.
std::pair<ParamValue, TreeDecomposition> k_treedepth(const Graph& g, int k);
// Exact pd_k with a k-dismantable path-decomposition witness.
std::pair<ParamValue, TreeDecomposition> k_pathdepth(const Graph& g, int k);

// Classical treedepth via the deletion/components recursion, memoized on
// canonical form. Independent of the td_k solver.
ParamValue treedepth_oracle(const Graph& g);
// Exact treewidth via elimination-order DP over vertex subsets. Returns -1
// on the empty graph.
ParamValue treewidth_oracle(const Graph& g);

// All (<k)-clique-sum presentations: separators S with |S| < k (|S| < |V|
// when infinite_k) such that g-S is disconnected, with every bipartition of
// the components into two nonempty groups. G_i = g[S u side_i] + clique(S).
struct CliqueSumSplit {
  std::vector<int> sep;
  std::vector<int> side1, side2;  // vertex sets excluding sep
};
std::vector<CliqueSumSplit> clique_sum_splits(const Graph& g, int k, bool infinite_k);

// p_w and p_L evaluators (letters a cost 1 via vertex deletion, s_k cost 0
// via clique-sum splits; words are consumed from the right).
ParamValue p_word(const Graph& g, const SigmaWord& w);
ParamValue p_regex(const Graph& g, const SigmaRegex& r);

}  // namespace kladder

#pragma once

#include <string>
#include <vector>

namespace kladder {

// Alphabet {a} union {s_k | k >= 1} union {s_inf}.
struct SigmaLetter {
  enum Kind { A, S, SInf } kind = A;
  int k = 0;  // for S only
  bool operator==(const SigmaLetter&) const = default;
};

using SigmaWord = std::vector<SigmaLetter>;

// Higman subsequence order: a embeds only in a, s_i embeds in s_j for i <= j
// (s_inf above all s_k). Greedy matching is exact for this order.
bool higman_leq(const SigmaWord& u, const SigmaWord& w);

// Regular expressions over the alphabet.
struct SigmaRegex {
  enum Kind { Empty, Epsilon, Letter, Concat, Union, Star } kind = Epsilon;
  SigmaLetter letter;
  std::vector<SigmaRegex> children;
};

// Text syntax: letters `a`, `s1`, `s2`, ..., `sinf`; postfix `*`, infix `|`,
// juxtaposition for concatenation, parentheses; whitespace ignored.
SigmaRegex parse_sigma_regex(const std::string& text);
SigmaWord parse_sigma_word(const std::string& text);
std::string format_sigma_word(const SigmaWord& w);

// Thompson NFA with epsilon transitions, single accepting state.
struct SigmaNfa {
  struct Edge {
    int from, to;
    bool eps;
    SigmaLetter letter;  // meaningful when !eps
  };
  int num_states = 0;
  int start = 0, accept = 0;
  std::vector<Edge> edges;
};

// NFA for the reversed language (the p_L search consumes words from the
// right, so the automaton runs over the mirror image).
SigmaNfa compile_reversed(const SigmaRegex& r);

SigmaRegex reverse_regex(const SigmaRegex& r);

}  // namespace kladder

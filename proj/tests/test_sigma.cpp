#include <doctest.h>

#include <set>

#include "kladder/errors.hpp"
#include "kladder/sigma.hpp"

using namespace kladder;

namespace {

// Epsilon-closure NFA simulation; letters match exactly.
bool nfa_accepts(const SigmaNfa& nfa, const SigmaWord& w) {
  auto closure = [&](std::set<int> states) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : nfa.edges)
        if (e.eps && states.count(e.from) && !states.count(e.to)) {
          states.insert(e.to);
          grew = true;
        }
    }
    return states;
  };
  std::set<int> cur = closure({nfa.start});
  for (const auto& letter : w) {
    std::set<int> next;
    for (const auto& e : nfa.edges)
      if (!e.eps && cur.count(e.from) && e.letter == letter) next.insert(e.to);
    cur = closure(next);
    if (cur.empty()) return false;
  }
  return cur.count(nfa.accept) != 0;
}

bool in_language(const SigmaRegex& r, const std::string& word) {
  SigmaWord w = parse_sigma_word(word);
  SigmaWord rev(w.rbegin(), w.rend());
  return nfa_accepts(compile_reversed(r), rev);
}

}  // namespace

TEST_CASE("word parsing and formatting round-trip") {
  for (const char* text : {"a", "aa", "as1", "aas2a", "s12", "asinfa", ""}) {
    SigmaWord w = parse_sigma_word(text);
    CHECK(parse_sigma_word(format_sigma_word(w)) == w);
  }
  CHECK(parse_sigma_word("aas2a").size() == 4);
  CHECK(parse_sigma_word("s12").size() == 1);
  CHECK(parse_sigma_word("s12")[0].k == 12);
  CHECK(parse_sigma_word("asinf")[1].kind == SigmaLetter::SInf);
  CHECK_THROWS_AS((void)parse_sigma_word("ab"), ValidationError);
  CHECK_THROWS_AS((void)parse_sigma_word("s"), ValidationError);
}

TEST_CASE("higman subsequence order") {
  auto leq = [](const char* u, const char* w) {
    return higman_leq(parse_sigma_word(u), parse_sigma_word(w));
  };
  CHECK(leq("", "aas2"));
  CHECK(leq("a", "a"));
  CHECK(leq("s1", "s2"));
  CHECK(leq("s2", "sinf"));
  CHECK(!leq("s2", "s1"));
  CHECK(!leq("sinf", "s5"));
  CHECK(leq("as1", "aas2"));
  CHECK(leq("as1a", "as2as1aa"));
  CHECK(!leq("aa", "as1"));
  CHECK(!leq("s1a", "as1"));
}

TEST_CASE("regex parsing and reversed-NFA membership") {
  SigmaRegex r1 = parse_sigma_regex("a*s2");
  CHECK(in_language(r1, "s2"));
  CHECK(in_language(r1, "aas2"));
  CHECK(!in_language(r1, "aas1"));
  CHECK(!in_language(r1, "s2a"));

  SigmaRegex r2 = parse_sigma_regex("(as1)*");
  CHECK(in_language(r2, ""));
  CHECK(in_language(r2, "as1"));
  CHECK(in_language(r2, "as1as1"));
  CHECK(!in_language(r2, "a"));
  CHECK(!in_language(r2, "s1as1"));

  SigmaRegex r3 = parse_sigma_regex("a s1 a* | a a s2 a*");
  CHECK(in_language(r3, "as1"));
  CHECK(in_language(r3, "as1aaa"));
  CHECK(in_language(r3, "aas2a"));
  CHECK(!in_language(r3, "as2"));

  SigmaRegex r4 = parse_sigma_regex("a*sinf");
  CHECK(in_language(r4, "aaasinf"));
  CHECK(!in_language(r4, "aaas9"));
}

TEST_CASE("regex reversal is an involution on membership") {
  SigmaRegex r = parse_sigma_regex("(aa|s1)*s2");
  SigmaRegex rr = reverse_regex(reverse_regex(r));
  for (const char* w : {"s2", "aas2", "s1aas2", "aas1", "", "s2s2"})
    CHECK(in_language(r, w) == in_language(rr, w));
}

TEST_CASE("regex parse errors") {
  CHECK_THROWS_AS((void)parse_sigma_regex("(a"), ValidationError);
  CHECK_THROWS_AS((void)parse_sigma_regex("*a"), ValidationError);
}

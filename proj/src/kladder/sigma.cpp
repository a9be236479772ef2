#include "kladder/sigma.hpp"

#include <algorithm>
#include <cctype>

#include "kladder/errors.hpp"

namespace kladder {

namespace {

bool letter_leq(const SigmaLetter& x, const SigmaLetter& y) {
  if (x.kind == SigmaLetter::A) return y.kind == SigmaLetter::A;
  if (y.kind == SigmaLetter::A) return false;
  if (y.kind == SigmaLetter::SInf) return true;
  if (x.kind == SigmaLetter::SInf) return false;
  return x.k <= y.k;
}

}  // namespace

bool higman_leq(const SigmaWord& u, const SigmaWord& w) {
  size_t i = 0;
  for (const auto& y : w) {
    if (i < u.size() && letter_leq(u[i], y)) i++;
  }
  return i == u.size();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }
  bool done() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  SigmaLetter letter() {
    skip();
    if (pos >= s.size()) throw ValidationError("regex: letter expected");
    if (s[pos] == 'a') {
      pos++;
      return {SigmaLetter::A, 0};
    }
    if (s[pos] == 's') {
      pos++;
      if (s.compare(pos, 3, "inf") == 0) {
        pos += 3;
        return {SigmaLetter::SInf, 0};
      }
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
      if (pos == start) throw ValidationError("regex: s must carry an index or 'inf'");
      int k = std::stoi(s.substr(start, pos - start));
      if (k < 1) throw ValidationError("regex: s index must be >= 1");
      return {SigmaLetter::S, k};
    }
    throw ValidationError(std::string("regex: unexpected character '") + s[pos] + "'");
  }

  SigmaRegex alt() {
    SigmaRegex left = cat();
    while (peek() == '|') {
      pos++;
      SigmaRegex right = cat();
      SigmaRegex u;
      u.kind = SigmaRegex::Union;
      u.children = {left, right};
      left = u;
    }
    return left;
  }

  SigmaRegex cat() {
    std::vector<SigmaRegex> parts;
    while (true) {
      char c = peek();
      if (c == '\0' || c == ')' || c == '|') break;
      parts.push_back(rep());
    }
    if (parts.empty()) {
      SigmaRegex e;
      e.kind = SigmaRegex::Epsilon;
      return e;
    }
    if (parts.size() == 1) return parts[0];
    SigmaRegex c;
    c.kind = SigmaRegex::Concat;
    c.children = std::move(parts);
    return c;
  }

  SigmaRegex rep() {
    SigmaRegex a = atom();
    while (peek() == '*') {
      pos++;
      SigmaRegex st;
      st.kind = SigmaRegex::Star;
      st.children = {a};
      a = st;
    }
    return a;
  }

  SigmaRegex atom() {
    if (peek() == '(') {
      pos++;
      SigmaRegex inner = alt();
      if (peek() != ')') throw ValidationError("regex: missing ')'");
      pos++;
      return inner;
    }
    SigmaRegex l;
    l.kind = SigmaRegex::Letter;
    l.letter = letter();
    return l;
  }
};

}  // namespace

SigmaRegex parse_sigma_regex(const std::string& text) {
  Parser p(text);
  SigmaRegex r = p.alt();
  if (!p.done()) throw ValidationError("regex: trailing input");
  return r;
}

SigmaWord parse_sigma_word(const std::string& text) {
  Parser p(text);
  SigmaWord w;
  while (!p.done()) w.push_back(p.letter());
  return w;
}

std::string format_sigma_word(const SigmaWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out.push_back(' ');
    if (l.kind == SigmaLetter::A)
      out += "a";
    else if (l.kind == SigmaLetter::SInf)
      out += "sinf";
    else
      out += "s" + std::to_string(l.k);
  }
  return out;
}

SigmaRegex reverse_regex(const SigmaRegex& r) {
  SigmaRegex out = r;
  for (auto& c : out.children) c = reverse_regex(c);
  if (out.kind == SigmaRegex::Concat)
    std::reverse(out.children.begin(), out.children.end());
  return out;
}

namespace {

struct NfaBuilder {
  SigmaNfa nfa;

  int fresh() { return nfa.num_states++; }
  void eps(int a, int b) { nfa.edges.push_back({a, b, true, {}}); }
  void lab(int a, int b, SigmaLetter l) { nfa.edges.push_back({a, b, false, l}); }

  // Thompson construction: returns (start, accept).
  std::pair<int, int> build(const SigmaRegex& r) {
    int s = fresh(), t = fresh();
    switch (r.kind) {
      case SigmaRegex::Empty:
        break;  // no transition: empty language
      case SigmaRegex::Epsilon:
        eps(s, t);
        break;
      case SigmaRegex::Letter:
        lab(s, t, r.letter);
        break;
      case SigmaRegex::Concat: {
        int cur = s;
        for (const auto& c : r.children) {
          auto [cs, ct] = build(c);
          eps(cur, cs);
          cur = ct;
        }
        eps(cur, t);
        break;
      }
      case SigmaRegex::Union:
        for (const auto& c : r.children) {
          auto [cs, ct] = build(c);
          eps(s, cs);
          eps(ct, t);
        }
        break;
      case SigmaRegex::Star: {
        auto [cs, ct] = build(r.children[0]);
        eps(s, t);
        eps(s, cs);
        eps(ct, cs);
        eps(ct, t);
        break;
      }
    }
    return {s, t};
  }
};

}  // namespace

SigmaNfa compile_reversed(const SigmaRegex& r) {
  NfaBuilder b;
  auto [s, t] = b.build(reverse_regex(r));
  b.nfa.start = s;
  b.nfa.accept = t;
  return b.nfa;
}

}  // namespace kladder

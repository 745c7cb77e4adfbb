#include "qsg/word.hpp"

#include <algorithm>
#include <sstream>

#include "qsg/ideal.hpp"

namespace qsg {

std::string Word::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << letters[i].base.str();
    if (letters[i].exp == -1) os << "^-1";
  }
  return os.str();
}

Word make_word(const Semigroup& s, std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw Error("letter exponent must be +-1");
    if (!s.in_semigroup(l.base))
      throw Error("letter base " + l.base.str() + " not in S");
  }
  return Word{std::move(letters)};
}

Word concat(const Word& w1, const Word& w2) {
  Word w = w1;
  w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
  return w;
}

Word word_inverse(const Word& w) {
  Word r;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(Letter{it->base, -it->exp});
  return r;
}

GroupElem evaluate(const Semigroup& s, const Word& w) {
  GroupElem g = s.identity();
  for (const Letter& l : w.letters)
    g = s.multiply(g, l.exp == 1 ? l.base : s.inverse(l.base));
  return g;
}

Word word_of_group_elem(const Semigroup& s, const GroupElem& g) {
  auto [p, q] = s.canonical_fraction(g);
  Word w;
  if (p != s.identity()) w.letters.push_back(Letter{p, -1});
  w.letters.push_back(Letter{q, +1});
  return w;
}

GIdeal act(const Semigroup& s, const Word& w, const GIdeal& x) {
  GIdeal cur = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    cur = it->exp == 1 ? translate_fwd(s, it->base, cur)
                       : translate_back(s, it->base, cur);
  return cur;
}

GIdeal g_act(const Semigroup& s, const GroupElem& g, const GIdeal& x) {
  return restrict_to_s(s, g_translate(s, g, x));
}

namespace {

GroupElem parse_elem_token_impl(const Semigroup& s, const std::string& tok) {
  switch (s.kind()) {
    case Kind::lattice: {
      if (s.rank() == 1 && !tok.empty() && tok.front() != '(')
        return GroupElem(std::vector<Int>{Int(tok)});
      if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
        throw Error("expected lattice element like (1,0), got '" + tok + "'");
      std::vector<Int> coords;
      std::string inner = tok.substr(1, tok.size() - 2);
      std::istringstream is(inner);
      std::string part;
      while (std::getline(is, part, ',')) coords.emplace_back(part);
      GroupElem g(std::move(coords));
      s.check_elem(g);
      return g;
    }
    case Kind::numerical:
      return GroupElem(Int(tok));
    case Kind::half_line: {
      Rat r(tok);
      r.canonicalize();
      return GroupElem(r);
    }
  }
  throw Error("bad kind");
}

GroupElem parse_elem_token(const Semigroup& s, const std::string& tok) {
  try {
    return parse_elem_token_impl(s, tok);
  } catch (const std::invalid_argument&) {
    throw Error("cannot parse element '" + tok + "'");
  }
}

}  // namespace

Word parse_word(const Semigroup& s, const std::string& text) {
  std::vector<Letter> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int exp = 1;
    if (tok.size() >= 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      exp = -1;
      tok.resize(tok.size() - 3);
    }
    letters.push_back(Letter{parse_elem_token(s, tok), exp});
  }
  return make_word(s, std::move(letters));
}

}  // namespace qsg

#pragma once

#include <string>
#include <vector>

#include "qsg/semigroup.hpp"

namespace qsg {

class GIdeal;

/// One letter p^{+1} or p^{-1} of the free monoid F(S); the base must lie
/// in S.
struct Letter {
  GroupElem base;
  int exp = 1;  // +1 or -1

  bool operator==(const Letter& o) const {
    return exp == o.exp && base == o.base;
  }
};

/// Word of the free monoid F(S). Letters are stored verbatim: concatenation
/// never cancels, and [a^-1, a^+1] has length 2.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool operator==(const Word& o) const { return letters == o.letters; }

  std::string str() const;
};

/// Checked constructor: verifies every base lies in S and every exponent
/// is +-1.
Word make_word(const Semigroup& s, std::vector<Letter> letters);

Word concat(const Word& w1, const Word& w2);

/// (p_1^{e1} ... p_n^{en})^{-1} = p_n^{-en} ... p_1^{-e1}.
Word word_inverse(const Word& w);

/// Evaluation homomorphism F(S) -> G.
GroupElem evaluate(const Semigroup& s, const Word& w);

/// The fixed injection of G into F(S): the two-letter word [p^-1, q^+1]
/// from canonical_fraction(g), with the p letter dropped when p = e.
Word word_of_group_elem(const Semigroup& s, const GroupElem& g);

/// Right-to-left action of w on an ideal: each letter applies
/// translate_fwd or translate_back.
GIdeal act(const Semigroup& s, const Word& w, const GIdeal& x);

/// Action of a group element on a set: g.X translated inside G and then
/// restricted to S. Agrees with acting by any word representing g (the
/// independence of the chosen fraction is a tested property).
GIdeal g_act(const Semigroup& s, const GroupElem& g, const GIdeal& x);

/// Parses words like "3^-1 5", "(1,0) (0,1)^-1" or "1/2^-1 3/4" depending
/// on the instance.
Word parse_word(const Semigroup& s, const std::string& text);

}  // namespace qsg

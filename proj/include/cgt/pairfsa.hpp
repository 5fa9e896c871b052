#ifndef CGT_PAIRFSA_HPP
#define CGT_PAIRFSA_HPP

#include <optional>
#include <utility>

#include "cgt/fsa.hpp"

namespace cgt {

// A padded two-tape automaton: symbols are letter pairs, 0 meaning the pad.
// Padding may only appear as a suffix on one coordinate; (0,0) is not a
// symbol.
using PairSym = std::pair<Letter, Letter>;

struct PairFsa {
  BasicFsa<PairSym> core;
  int num_gens = 0;
};

std::vector<PairSym> pair_alphabet(int num_gens);
std::vector<PairSym> convolution(const Word& u, const Word& v);

bool accepts_pair(const PairFsa& r, const Word& u, const Word& v);

// Identity relation on the language of a (deterministic) word automaton.
PairFsa identity_pair(const Fsa& lang, int num_gens);

PairFsa empty_pair(int num_gens);

// {(u,w) : exists v with (u,v) in r and (v,w) in s}
PairFsa compose(const PairFsa& r, const PairFsa& s);

// {v : exists u accepted by a with (u,v) in r}
Fsa image(const PairFsa& r, const Fsa& a);

// first / second coordinate projections
Fsa domain_fsa(const PairFsa& r);
Fsa range_fsa(const PairFsa& r);

// restrict to pairs with first coordinate in a and second in b
PairFsa restrict_pair(const PairFsa& r, const Fsa& a, const Fsa& b);

// Unique v with (u,v) in r; throws if u is outside the domain or the
// relation is not functional at u.
Word apply(const PairFsa& r, const Word& u);

bool pair_is_empty(const PairFsa& r);

// shortlex-least accepted pair, as (u, v)
std::optional<std::pair<Word, Word>> least_pair(const PairFsa& r);

}  // namespace cgt

#endif

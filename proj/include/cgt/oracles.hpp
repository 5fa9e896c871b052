#ifndef CGT_ORACLES_HPP
#define CGT_ORACLES_HPP

#include <set>

#include "cgt/lattice.hpp"

namespace cgt {

// Independent membership checks used to cross-validate the main algorithms.
// All of them are deliberately naive.

// Free group: search products h_{i1}^±1 ... h_{id}^±1, d <= depth, for one
// reducing to w. Only a positive answer is conclusive.
bool free_membership_bruteforce(const std::vector<Word>& generators, const Word& w, int depth);

// Z^n: w is in <generators> iff its exponent vector lies in the lattice they
// abelianize to.
bool abelian_membership(int rank, const std::vector<Word>& generators, const Word& w);

// G = Z^2 * <t> on the alphabet (a, b, t). Membership in R * <t^d> where R
// is a sublattice of Z^2; t_divisor = 0 means the subgroup omits t entirely.
bool toral_membership(const LatticeSubgroup& r, int t_divisor, const Word& w);

// Permutations of {0..n-1} as images; composition left-to-right.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
Perm perm_compose(const Perm& p, const Perm& q);  // apply p, then q
Perm perm_of_word(const std::vector<Perm>& generator_images, const Word& w);

// All elements of the subgroup generated by the given permutations.
std::set<Perm> perm_closure(const std::vector<Perm>& generators);

// Is the permutation realized by w inside the subgroup the given words
// generate (under the same generator images)?
bool perm_membership(const std::vector<Perm>& generator_images,
                     const std::vector<Word>& subgroup_words, const Word& w);

}  // namespace cgt

#endif

#ifndef CGT_LATTICE_HPP
#define CGT_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/words.hpp"

namespace cgt {

using IntVec = std::vector<int64_t>;
using IntMat = std::vector<IntVec>;

// Subgroup of Z^n given by its canonical row-style Hermite normal form
// basis: row echelon, positive pivots, entries above each pivot reduced
// into [0, pivot).
struct LatticeSubgroup {
  int ambient_rank = 0;
  IntMat basis;  // HNF rows, row count <= ambient_rank
};

LatticeSubgroup hnf(int ambient_rank, const IntMat& vectors);

bool lattice_membership(const LatticeSubgroup& s, const IntVec& v);

// |det| of the basis when it has full rank, otherwise empty.
std::optional<int64_t> finite_index(const LatticeSubgroup& s);

// Fair enumeration of canonical finite-index bases of Z^n: by max absolute
// entry, then lexicographic. Each finite-index subgroup appears exactly
// once (as its HNF basis).
class FiniteIndexEnumerator {
 public:
  explicit FiniteIndexEnumerator(int rank);
  IntMat next();

 private:
  int rank_;
  int layer_;
  std::vector<IntMat> buffer_;
  size_t buffer_pos_ = 0;
};

// Exponent vector of a word over a rank-n peripheral alphabet.
IntVec abelianize(int rank, const Word& w);
// Sorted normal form x1^k1 ... xn^kn.
Word vector_to_word(const IntVec& v);

// One free abelian peripheral subgroup with its embedding into F(A).
struct Peripheral {
  std::string name;
  int rank = 0;
  Alphabet alphabet;          // X_P
  std::vector<Word> embedding;  // image of each X_P generator in F(A)
};

struct PeripheralStructure {
  std::vector<Peripheral> peripherals;
};

// Apply the embedding letter-by-letter to a word over X_P.
Word embed_peripheral_word(const Peripheral& p, const Word& w);

}  // namespace cgt

#endif

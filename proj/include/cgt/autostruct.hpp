#ifndef CGT_AUTOSTRUCT_HPP
#define CGT_AUTOSTRUCT_HPP

#include <memory>
#include <string>

#include "cgt/lattice.hpp"
#include "cgt/pairfsa.hpp"

namespace cgt {

// Normal-form computation for a concrete group on a fixed alphabet. Builtin
// structures carry one; it drives the word-difference construction of their
// multiplier automata.
struct GroupOracle {
  virtual ~GroupOracle() = default;
  virtual Word normal_form(const Word& w) const = 0;
  bool equal(const Word& u, const Word& v) const { return normal_form(u) == normal_form(v); }
};

struct FreeOracle final : GroupOracle {
  Word normal_form(const Word& w) const override { return free_reduce(w); }
};

// Free abelian group; each alphabet letter maps to an integer vector. The
// normal form is the sorted word on the first `rank` generators.
struct AbelianOracle final : GroupOracle {
  int rank = 0;
  std::vector<IntVec> letter_vec;  // one per generator of the alphabet
  Word normal_form(const Word& w) const override;
};

// Free product: the alphabet splits at `split` (generators < split belong to
// the left factor). Normal forms are alternating nonempty factor syllables.
struct FreeProductOracle final : GroupOracle {
  int split = 0;
  std::shared_ptr<const GroupOracle> left, right;
  Word normal_form(const Word& w) const override;
};

struct ValidationReport {
  std::vector<std::string> violations;
  int words_checked = 0;
  bool ok() const { return violations.empty(); }
};

struct AutomaticStructure {
  Alphabet alphabet;  // X
  Fsa word_acceptor;  // L, deterministic
  std::vector<PairFsa> mult_pos;  // per generator g: M_g
  std::vector<PairFsa> mult_neg;  // per generator g: M_{g^-1}
  PairFsa m_eps;                  // equality relation on L
  bool unique_reps = true;
  bool geodesic = false;
  std::shared_ptr<const GroupOracle> oracle;  // builtins only; may be null

  const PairFsa& multiplier(Letter l) const {
    return l > 0 ? mult_pos[gen_of(l)] : mult_neg[gen_of(l)];
  }
};

// Word-difference construction: the relation {(u,v) in L x L : u*target = v}
// explored as (L-state, L-state, group difference) triples, differences
// capped at norm_bound letters of normal form.
PairFsa build_multiplier(const Fsa& word_acceptor, const GroupOracle& oracle, int num_gens,
                         const Word& target, int norm_bound);

// L-representative of w, by iterated multiplier application from the empty
// word.
Word representative(const AutomaticStructure& s, const Word& w);

bool word_problem(const AutomaticStructure& s, const Word& w);

// {(u,v) in L x L : u*h = v}, composed from the letter multipliers of h.
PairFsa multiplier_for_word(const AutomaticStructure& s, const Word& h);

AutomaticStructure builtin_shortlex_free(const Alphabet& alphabet);
AutomaticStructure builtin_shortlex_abelian(const Alphabet& alphabet);
AutomaticStructure builtin_free_product(const AutomaticStructure& s1,
                                        const AutomaticStructure& s2);

// Bounded-depth consistency check of the multiplier data against
// letter-by-letter representative recomputation.
ValidationReport validate(const AutomaticStructure& s, int depth);

}  // namespace cgt

#endif

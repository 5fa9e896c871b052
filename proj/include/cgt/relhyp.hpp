#ifndef CGT_RELHYP_HPP
#define CGT_RELHYP_HPP

#include <map>
#include <memory>
#include <variant>

#include "cgt/completion.hpp"
#include "cgt/lstallings.hpp"

namespace cgt {

// Everything the dovetailed decision procedure needs: a presentation of G
// over A (peripheral relators included), the peripheral data, an automatic
// structure over X containing A and the peripheral alphabets, and the
// translations u_x for the letters of X outside A.
struct RelHypInstance {
  Presentation presentation;  // over A
  PeripheralStructure peripherals;
  AutomaticStructure structure;  // over X
  std::map<int, Word> x_translation;  // X generator index -> word over A
};

// Words over A re-spelled over X (matching generators by name).
Word translate_word(const Alphabet& from, const Alphabet& to, const Word& w);

// Reduced words over an alphabet in shortlex order, one at a time.
class ReducedWordEnumerator {
 public:
  explicit ReducedWordEnumerator(int num_gens) : num_gens_(num_gens) {}
  Word next();

 private:
  int num_gens_;
  int length_ = 0;
  std::vector<Word> layer_{Word{}};
  size_t pos_ = 0;
};

// ShortLex-least u over A with x = u in G, found through the word problem.
Word find_u_x(const RelHypInstance& instance, int x_gen);

// Presentation of G on X: relators of A plus x * u_x^-1, cyclically closed.
Presentation build_r_x(const RelHypInstance& instance);

struct CandidateAugmentation {
  struct Item {
    Word conjugator;  // over A
    int peripheral = 0;
    IntMat tuple;  // canonical finite-index basis of the peripheral lattice
  };
  std::vector<Item> items;
};

// Fair enumeration of candidate augmentations: by total weight, the empty
// candidate first; every candidate appears at a finite position.
class CandidateEnumerator {
 public:
  CandidateEnumerator(const RelHypInstance& instance);
  CandidateAugmentation next();

 private:
  void fill_layer();
  const RelHypInstance* instance_;
  int weight_ = -1;
  std::vector<CandidateAugmentation> layer_;
  size_t pos_ = 0;
  std::vector<Word> conjugators_;  // shortlex words over A, grown on demand
  ReducedWordEnumerator conj_enum_;
  std::vector<std::vector<IntMat>> tuples_;  // per peripheral, grown on demand
  std::vector<FiniteIndexEnumerator> tuple_enums_;
};

// Generators of H1 = <H, g_i^{x_i}> as words over X.
std::vector<Word> augment(const RelHypInstance& instance, const std::vector<Word>& generators,
                          const CandidateAugmentation& c);

struct MemberVerdict {
  int steps = 0;
};
struct NonMemberVerdict {
  CandidateAugmentation candidate;
  LStallingsGraph certificate;
  int steps = 0;
};
struct VerdictBudgetExhausted {
  int steps = 0;
};
using MembershipVerdict = std::variant<MemberVerdict, NonMemberVerdict, VerdictBudgetExhausted>;

// Raised when both semi-algorithms claim opposite verdicts; indicates a bug.
struct ContradictionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Schedule { Diagonal, Alternating };

// Dovetailed pair of semi-algorithms: completion rounds on <A|R> against
// budgeted L-Stallings runs over enumerated candidate augmentations.
MembershipVerdict decide_membership(const RelHypInstance& instance,
                                    const std::vector<Word>& generators, const Word& g,
                                    int budget, Schedule schedule = Schedule::Diagonal);

// Desk-scale builtin: G = Z^2 * Z = <a,b,t | [a,b]>, P = {<a,b>}.
RelHypInstance make_toral_instance();

}  // namespace cgt

#endif

#ifndef CGT_LSTALLINGS_HPP
#define CGT_LSTALLINGS_HPP

#include <optional>
#include <variant>

#include "cgt/autostruct.hpp"
#include "cgt/stallings.hpp"

namespace cgt {

// Fragment of Schreier(G,H) spanned by the base loops labeled by L-words;
// certified means the fragment is closed under the subgroup's multipliers
// and its loop language is exactly the L-representatives of H.
struct LStallingsGraph {
  StallingsGraph graph;
  const AutomaticStructure* structure = nullptr;
  bool certified = false;
  // largest representative length added during construction, diagnostic only
  int quasiconvexity_witness = 0;
};

// Words of L reading as loops at the base vertex.
Fsa loop_language(const LStallingsGraph& g);

struct Certified {};
struct Counterexample {
  Word witness;    // L-word reading a base loop
  Word generator;  // subgroup generator (or inverse) breaking closure
};
using CertificateResult = std::variant<Certified, Counterexample>;

// Closure test: the loop language must contain the identity representative
// and be closed under right multiplication by every generator and inverse.
CertificateResult closure_certificate(const LStallingsGraph& g,
                                      const std::vector<Word>& subgroup_generators);

// Add representative(witness * generator) as a base loop, fold, trim.
LStallingsGraph grow(LStallingsGraph g, const Word& witness, const Word& generator);

struct LBudgetExhausted {
  LStallingsGraph partial;
};
using LStallingsResult = std::variant<LStallingsGraph, LBudgetExhausted>;

LStallingsResult compute_l_stallings(const AutomaticStructure& structure,
                                     const std::vector<Word>& generators, int step_budget);

// Membership through a certified fragment.
bool membership_l(const LStallingsGraph& g, const Word& w);

// Resumable version of compute_l_stallings for the orchestrator.
class LStallingsRun {
 public:
  LStallingsRun(const AutomaticStructure& structure, std::vector<Word> generators);
  // One certificate-plus-growth iteration; returns true once certified.
  bool step();
  bool certified() const { return state_.certified; }
  const LStallingsGraph& graph() const { return state_; }

 private:
  std::vector<Word> generators_;
  std::vector<std::pair<Word, PairFsa>> mults_;  // generator or inverse -> multiplier
  LStallingsGraph state_;
};

}  // namespace cgt

#endif

#include "cgt/lstallings.hpp"

namespace cgt {

Fsa loop_language(const LStallingsGraph& g) {
  return intersect_fsa(determinize(loop_fsa(g.graph)), g.structure->word_acceptor);
}

namespace {

using GenMultipliers = std::vector<std::pair<Word, PairFsa>>;

GenMultipliers generator_multipliers(const AutomaticStructure& s,
                                     const std::vector<Word>& generators) {
  GenMultipliers out;
  for (const Word& h : generators) {
    out.emplace_back(h, multiplier_for_word(s, h));
    Word hi = inverse(h);
    out.emplace_back(hi, multiplier_for_word(s, hi));
  }
  return out;
}

CertificateResult certificate_with(const LStallingsGraph& g, const GenMultipliers& mults) {
  Fsa loops = loop_language(g);
  if (!loops.accepts({})) {
    // never happens: the base vertex accepts the empty word and builtins
    // keep the empty word in L
    return Counterexample{Word{}, Word{}};
  }
  Fsa outside = complement_fsa(loops);
  for (const auto& [generator, mult] : mults) {
    PairFsa bad = restrict_pair(mult, loops, outside);
    auto pair = least_pair(bad);
    if (pair) return Counterexample{pair->first, generator};
  }
  return Certified{};
}

}  // namespace

CertificateResult closure_certificate(const LStallingsGraph& g,
                                      const std::vector<Word>& subgroup_generators) {
  if (!g.structure->unique_reps)
    throw MalformedInput("structure without unique representatives is unsupported");
  return certificate_with(g, generator_multipliers(*g.structure, subgroup_generators));
}

LStallingsGraph grow(LStallingsGraph g, const Word& witness, const Word& generator) {
  Word rep = representative(*g.structure, concat(witness, generator));
  GraphBuilder b = to_builder(g.graph);
  b.add_loop(b.base, rep);
  g.graph = trim(fold(b));
  g.certified = false;
  g.quasiconvexity_witness = std::max(g.quasiconvexity_witness, static_cast<int>(rep.size()));
  return g;
}

namespace {

LStallingsGraph seed_graph(const AutomaticStructure& structure,
                           const std::vector<Word>& generators) {
  LStallingsGraph g;
  g.structure = &structure;
  GraphBuilder b;
  b.alphabet = structure.alphabet;
  b.base = b.add_vertex();
  int witness = 0;
  for (const Word& h : generators)
    for (const Word& w : {h, inverse(h)}) {
      Word rep = representative(structure, w);
      witness = std::max(witness, static_cast<int>(rep.size()));
      b.add_loop(b.base, rep);
    }
  g.graph = trim(fold(b));
  g.quasiconvexity_witness = witness;
  return g;
}

}  // namespace

LStallingsResult compute_l_stallings(const AutomaticStructure& structure,
                                     const std::vector<Word>& generators, int step_budget) {
  LStallingsRun run(structure, generators);
  for (int i = 0; i < step_budget; ++i)
    if (run.step()) return run.graph();
  return LBudgetExhausted{run.graph()};
}

bool membership_l(const LStallingsGraph& g, const Word& w) {
  if (!g.certified) throw MalformedInput("membership on an uncertified fragment");
  Word rep = representative(*g.structure, w);
  return walk(g.graph, g.graph.base, rep) == g.graph.base;
}

LStallingsRun::LStallingsRun(const AutomaticStructure& structure, std::vector<Word> generators)
    : generators_(std::move(generators)) {
  if (!structure.unique_reps)
    throw MalformedInput("structure without unique representatives is unsupported");
  state_ = seed_graph(structure, generators_);
}

bool LStallingsRun::step() {
  if (state_.certified) return true;
  if (mults_.empty() && !generators_.empty())
    mults_ = generator_multipliers(*state_.structure, generators_);
  CertificateResult res = certificate_with(state_, mults_);
  if (std::holds_alternative<Certified>(res)) {
    state_.certified = true;
    return true;
  }
  const auto& cx = std::get<Counterexample>(res);
  state_ = grow(std::move(state_), cx.witness, cx.generator);
  return false;
}

}  // namespace cgt

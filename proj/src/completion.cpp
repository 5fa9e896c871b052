#include "cgt/completion.hpp"

namespace cgt {

CompletionState init_completion(const Presentation& presentation,
                                const std::vector<Word>& generators, const Word& target,
                                bool glue_closure) {
  CompletionState s;
  s.presentation = presentation;
  s.target = free_reduce(target);
  s.glue_closure = glue_closure;
  if (!presentation.alphabet.contains_word(s.target)) throw MalformedInput("target outside alphabet");
  std::vector<Word> reduced;
  for (const Word& g : generators) {
    if (!presentation.alphabet.contains_word(g)) throw MalformedInput("generator outside alphabet");
    Word r = free_reduce(g);
    if (!r.empty()) reduced.push_back(r);
  }
  s.graph = trim(fold(bouquet(presentation.alphabet, reduced)));
  return s;
}

CompletionState completion_step(const CompletionState& s) {
  const std::vector<Word>& relators =
      s.glue_closure ? relator_closure(s.presentation).relators : s.presentation.relators;
  GraphBuilder b = to_builder(s.graph);
  int vertices_at_start = b.num_vertices;
  for (int v = 0; v < vertices_at_start; ++v)
    for (const Word& r : relators) b.add_loop(v, r);
  CompletionState next = s;
  next.graph = fold(b);
  next.round = s.round + 1;
  return next;
}

bool check_target(const CompletionState& s) {
  return walk(s.graph, s.graph.base, s.target) == s.graph.base;
}

CompletionResult run_completion(const Presentation& presentation,
                                const std::vector<Word>& generators, const Word& target,
                                int budget, bool glue_closure, const CompletionTrace& trace) {
  CompletionState s = init_completion(presentation, generators, target, glue_closure);
  if (trace) trace(s);
  if (check_target(s)) return Member{0};
  for (int i = 0; i < budget; ++i) {
    s = completion_step(s);
    if (trace) trace(s);
    if (check_target(s)) return Member{s.round};
  }
  return BudgetExhausted{s.round};
}

}  // namespace cgt

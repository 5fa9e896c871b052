#ifndef CGT_COMPLETION_HPP
#define CGT_COMPLETION_HPP

#include <functional>
#include <variant>

#include "cgt/stallings.hpp"

namespace cgt {

// Positive semi-algorithm state: folded base-rooted graph, enriched each
// round with relator loops at every vertex.
struct CompletionState {
  StallingsGraph graph;
  Presentation presentation;
  Word target;
  int round = 0;
  bool glue_closure = false;  // glue the cyclic closure instead of the raw relators
};

CompletionState init_completion(const Presentation& presentation,
                                const std::vector<Word>& generators, const Word& target,
                                bool glue_closure = false);

// Glue a loop labeled by every relator at every vertex of the incoming
// graph, then fold.
CompletionState completion_step(const CompletionState& s);

bool check_target(const CompletionState& s);

struct Member {
  int rounds = 0;
};
struct BudgetExhausted {
  int rounds = 0;
};
using CompletionResult = std::variant<Member, BudgetExhausted>;

// Optional per-round observer (round, state), for tracing.
using CompletionTrace = std::function<void(const CompletionState&)>;

CompletionResult run_completion(const Presentation& presentation,
                                const std::vector<Word>& generators, const Word& target,
                                int budget, bool glue_closure = false,
                                const CompletionTrace& trace = nullptr);

}  // namespace cgt

#endif

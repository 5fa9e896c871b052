#include "cgt/relhyp.hpp"

#include <deque>
#include <functional>

namespace cgt {

Word translate_word(const Alphabet& from, const Alphabet& to, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    int g = to.index_of(from.name(gen_of(l)));
    if (g < 0) throw MalformedInput("generator not present in target alphabet");
    out.push_back(l > 0 ? g + 1 : -(g + 1));
  }
  return out;
}

Word ReducedWordEnumerator::next() {
  if (pos_ >= layer_.size()) {
    // extend every word of the current layer by each non-cancelling letter
    std::vector<Word> next_layer;
    for (const Word& w : layer_)
      for (Letter l : signed_alphabet(num_gens_)) {
        if (!w.empty() && w.back() == -l) continue;
        Word e = w;
        e.push_back(l);
        next_layer.push_back(e);
      }
    layer_ = std::move(next_layer);
    ++length_;
    pos_ = 0;
  }
  return layer_[pos_++];
}

Word find_u_x(const RelHypInstance& instance, int x_gen) {
  const Alphabet& a = instance.presentation.alphabet;
  const Alphabet& x = instance.structure.alphabet;
  if (a.index_of(x.name(x_gen)) >= 0)
    throw MalformedInput("find_u_x applies to letters outside A only");
  ReducedWordEnumerator words(a.size());
  for (;;) {
    Word u = words.next();
    Word cand = Word{x_gen + 1};
    Word ux = translate_word(a, x, u);
    cand.insert(cand.end(), ux.rbegin(), ux.rend());
    for (size_t i = 1; i < cand.size(); ++i) cand[i] = -cand[i];
    if (word_problem(instance.structure, cand)) return u;
  }
}

Presentation build_r_x(const RelHypInstance& instance) {
  const Alphabet& a = instance.presentation.alphabet;
  const Alphabet& x = instance.structure.alphabet;
  Presentation p;
  p.alphabet = x;
  for (const Word& r : instance.presentation.relators)
    p.relators.push_back(translate_word(a, x, r));
  for (const auto& [gen, u] : instance.x_translation) {
    Word r{gen + 1};
    Word ui = inverse(translate_word(a, x, u));
    r.insert(r.end(), ui.begin(), ui.end());
    p.relators.push_back(free_reduce(r));
  }
  return relator_closure(p);
}

CandidateEnumerator::CandidateEnumerator(const RelHypInstance& instance)
    : instance_(&instance), conj_enum_(instance.presentation.alphabet.size()) {
  for (const Peripheral& p : instance.peripherals.peripherals) {
    tuples_.emplace_back();
    tuple_enums_.emplace_back(p.rank);
  }
}

void CandidateEnumerator::fill_layer() {
  ++weight_;
  layer_.clear();
  int w = weight_;
  int num_periph = static_cast<int>(tuples_.size());
  if (w == 0) {
    layer_.push_back(CandidateAugmentation{});
    return;
  }
  if (num_periph == 0) return;  // only the empty candidate exists
  // grow caches so indices up to w-1 are available
  while (static_cast<int>(conjugators_.size()) < w) conjugators_.push_back(conj_enum_.next());
  for (int p = 0; p < num_periph; ++p)
    while (static_cast<int>(tuples_[p].size()) < w) tuples_[p].push_back(tuple_enums_[p].next());

  // item weight = 1 + conjugator index + peripheral index + tuple index
  std::vector<CandidateAugmentation::Item> items;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      if (!items.empty()) {
        CandidateAugmentation c;
        c.items = items;
        layer_.push_back(c);
      }
      return;
    }
    for (int iw = 1; iw <= remaining; ++iw) {
      for (int ci = 0; ci < iw; ++ci)
        for (int pi = 0; pi < num_periph && ci + pi < iw; ++pi) {
          int ti = iw - 1 - ci - pi;
          CandidateAugmentation::Item item;
          item.conjugator = conjugators_[ci];
          item.peripheral = pi;
          item.tuple = tuples_[pi][ti];
          items.push_back(item);
          rec(remaining - iw);
          items.pop_back();
        }
    }
  };
  rec(w);
}

CandidateAugmentation CandidateEnumerator::next() {
  while (pos_ >= layer_.size()) {
    fill_layer();
    pos_ = 0;
  }
  return layer_[pos_++];
}

std::vector<Word> augment(const RelHypInstance& instance, const std::vector<Word>& generators,
                          const CandidateAugmentation& c) {
  const Alphabet& a = instance.presentation.alphabet;
  const Alphabet& x = instance.structure.alphabet;
  std::vector<Word> out;
  for (const Word& h : generators) out.push_back(translate_word(a, x, h));
  for (const auto& item : c.items) {
    const Peripheral& p = instance.peripherals.peripherals.at(item.peripheral);
    Word conj = translate_word(a, x, item.conjugator);
    for (const IntVec& row : item.tuple) {
      Word local = vector_to_word(row);  // over X_P
      Word wx = translate_word(p.alphabet, x, local);
      // g^x = x^-1 g x
      Word conjugated = concat(concat(inverse(conj), wx), conj);
      out.push_back(free_reduce(conjugated));
    }
  }
  return out;
}

namespace {

struct NegativeRun {
  CandidateAugmentation candidate;
  std::unique_ptr<LStallingsRun> run;
};

}  // namespace

MembershipVerdict decide_membership(const RelHypInstance& instance,
                                    const std::vector<Word>& generators, const Word& g,
                                    int budget, Schedule schedule) {
  CompletionState pos = init_completion(instance.presentation, generators, g);
  Word g_x = translate_word(instance.presentation.alphabet, instance.structure.alphabet,
                            free_reduce(g));
  if (check_target(pos)) return MemberVerdict{0};

  CandidateEnumerator candidates(instance);
  std::deque<NegativeRun> runs;
  auto spawn = [&]() {
    NegativeRun nr;
    nr.candidate = candidates.next();
    nr.run = std::make_unique<LStallingsRun>(instance.structure,
                                             augment(instance, generators, nr.candidate));
    runs.push_back(std::move(nr));
  };
  auto advance = [&](NegativeRun& nr) -> std::optional<NonMemberVerdict> {
    if (!nr.run->step()) return std::nullopt;
    // certified: a negative membership answer on H1 settles g not in H
    if (membership_l(nr.run->graph(), g_x)) return std::nullopt;  // discard below
    NonMemberVerdict v;
    v.candidate = nr.candidate;
    v.certificate = nr.run->graph();
    return v;
  };

  for (int t = 1; t <= budget; ++t) {
    pos = completion_step(pos);
    bool member_now = check_target(pos);

    std::optional<NonMemberVerdict> non_member_now;
    if (schedule == Schedule::Diagonal) {
      spawn();
      for (auto it = runs.begin(); it != runs.end();) {
        if (it->run->certified()) {
          // already settled positively for H1 in an earlier step; drop
          it = runs.erase(it);
          continue;
        }
        auto v = advance(*it);
        if (v) {
          non_member_now = std::move(v);
          break;
        }
        if (it->run->certified())
          it = runs.erase(it);  // certified but g in H1: says nothing about H
        else
          ++it;
      }
    } else {  // Alternating: one run per step, round-robin
      if (t % 2 == 1) spawn();
      if (!runs.empty()) {
        NegativeRun nr = std::move(runs.front());
        runs.pop_front();
        auto v = advance(nr);
        if (v)
          non_member_now = std::move(v);
        else if (!nr.run->certified())
          runs.push_back(std::move(nr));
      }
    }

    if (member_now && non_member_now)
      throw ContradictionError("both semi-algorithms produced opposite verdicts");
    if (member_now) return MemberVerdict{t};
    if (non_member_now) {
      non_member_now->steps = t;
      return *std::move(non_member_now);
    }
  }
  return VerdictBudgetExhausted{budget};
}

RelHypInstance make_toral_instance() {
  RelHypInstance inst;
  Alphabet a({"a", "b", "t"});
  inst.presentation.alphabet = a;
  inst.presentation.relators.push_back(a.parse("a*b*a^-1*b^-1"));

  Peripheral p;
  p.name = "P1";
  p.rank = 2;
  p.alphabet = Alphabet({"a", "b"});
  p.embedding = {a.parse("a"), a.parse("b")};
  inst.peripherals.peripherals.push_back(p);

  AutomaticStructure zz = builtin_shortlex_abelian(Alphabet({"a", "b"}));
  AutomaticStructure z = builtin_shortlex_free(Alphabet({"t"}));
  inst.structure = builtin_free_product(zz, z);
  return inst;
}

}  // namespace cgt

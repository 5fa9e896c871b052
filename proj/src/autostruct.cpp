#include "cgt/autostruct.hpp"

#include <deque>
#include <map>
#include <tuple>

namespace cgt {

Word AbelianOracle::normal_form(const Word& w) const {
  IntVec v(rank, 0);
  for (Letter l : w) {
    if (gen_of(l) >= static_cast<int>(letter_vec.size()))
      throw MalformedInput("letter outside oracle alphabet");
    const IntVec& lv = letter_vec[gen_of(l)];
    for (int i = 0; i < rank; ++i) v[i] += (l > 0 ? lv[i] : -lv[i]);
  }
  return vector_to_word(v);
}

Word FreeProductOracle::normal_form(const Word& w) const {
  struct Syllable {
    int factor;
    Word local;
  };
  std::vector<Syllable> stack;
  for (Letter l : w) {
    int f = gen_of(l) < split ? 0 : 1;
    Letter local = f == 0 ? l : (l > 0 ? l - split : l + split);
    if (!stack.empty() && stack.back().factor == f) {
      Word cat = stack.back().local;
      cat.push_back(local);
      stack.back().local = (f == 0 ? left : right)->normal_form(cat);
      if (stack.back().local.empty()) stack.pop_back();
    } else {
      Word nf = (f == 0 ? left : right)->normal_form({local});
      if (!nf.empty()) stack.push_back({f, nf});
    }
  }
  Word out;
  for (const Syllable& s : stack)
    for (Letter local : s.local)
      out.push_back(s.factor == 0 ? local : (local > 0 ? local + split : local - split));
  return out;
}

PairFsa build_multiplier(const Fsa& word_acceptor, const GroupOracle& oracle, int num_gens,
                         const Word& target, int norm_bound) {
  Fsa L = word_acceptor.deterministic ? word_acceptor : determinize(word_acceptor);
  Word target_nf = oracle.normal_form(target);

  BasicFsa<PairSym> a;
  a.alphabet = pair_alphabet(num_gens);
  a.deterministic = true;

  std::map<Word, int> diff_ids;
  std::vector<Word> diffs;
  auto diff_id = [&](const Word& d) {
    auto [it, fresh] = diff_ids.emplace(d, static_cast<int>(diffs.size()));
    if (fresh) diffs.push_back(d);
    return it->second;
  };

  using State = std::tuple<int, int, int>;  // (u state or -1, v state or -1, diff)
  std::map<State, int> ids;
  std::deque<State> queue;
  auto finished = [&](int p) { return p < 0 || L.accepting[p]; };
  auto intern = [&](int p, int q, int d) {
    State key{p, q, d};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    bool acc = finished(p) && finished(q) && diffs[d] == target_nf;
    int id = a.add_state(acc);
    ids.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  a.initial = intern(L.initial, L.initial, diff_id(Word{}));
  while (!queue.empty()) {
    auto [p, q, d] = queue.front();
    queue.pop_front();
    int sid = ids.at({p, q, d});
    for (const PairSym& sym : a.alphabet) {
      auto [x, y] = sym;
      int np, nq;
      if (x == 0) {
        if (!finished(p)) continue;
        np = -1;
      } else {
        if (p < 0) continue;
        np = L.step(p, x);
        if (np < 0) continue;
      }
      if (y == 0) {
        if (!finished(q)) continue;
        nq = -1;
      } else {
        if (q < 0) continue;
        nq = L.step(q, y);
        if (nq < 0) continue;
      }
      Word cat;
      if (x != 0) cat.push_back(-x);
      cat.insert(cat.end(), diffs[d].begin(), diffs[d].end());
      if (y != 0) cat.push_back(y);
      Word nd = oracle.normal_form(cat);
      if (static_cast<int>(nd.size()) > norm_bound) continue;
      a.add_trans(sid, sym, intern(np, nq, diff_id(nd)));
    }
  }
  PairFsa out;
  out.num_gens = num_gens;
  out.core = minimize(a);
  return out;
}

Word representative(const AutomaticStructure& s, const Word& w) {
  if (!s.word_acceptor.accepts({}))
    throw MalformedInput("structure invalid: empty word not in L");
  Word u;  // representative of the identity
  for (Letter l : w) {
    if (gen_of(l) >= s.alphabet.size()) throw MalformedInput("letter outside structure alphabet");
    try {
      u = cgt::apply(s.multiplier(l), u);
    } catch (const MalformedInput& e) {
      throw MalformedInput(std::string("structure invalid: multiplier application failed: ") +
                           e.what());
    }
  }
  return u;
}

bool word_problem(const AutomaticStructure& s, const Word& w) {
  return representative(s, w).empty();
}

PairFsa multiplier_for_word(const AutomaticStructure& s, const Word& h) {
  PairFsa r = s.m_eps;
  for (Letter l : h) r = compose(r, s.multiplier(l));
  return r;
}

namespace {

Fsa abelian_acceptor(int rank, int num_gens) {
  Fsa a;
  a.alphabet = signed_alphabet(num_gens);
  a.deterministic = true;
  a.add_state(true);  // start
  // state 1 + 2g + (sign<0): currently emitting generator g with that sign
  for (int g = 0; g < rank; ++g) {
    a.add_state(true);
    a.add_state(true);
  }
  for (int g = 0; g < rank; ++g)
    for (int sgn = 0; sgn < 2; ++sgn) {
      Letter l = sgn ? -(g + 1) : (g + 1);
      int st = 1 + 2 * g + sgn;
      a.add_trans(0, l, st);
      a.add_trans(st, l, st);
      for (int g2 = g + 1; g2 < rank; ++g2)
        for (int sgn2 = 0; sgn2 < 2; ++sgn2)
          a.add_trans(st, sgn2 ? -(g2 + 1) : (g2 + 1), 1 + 2 * g2 + sgn2);
    }
  return a;
}

Fsa free_product_acceptor(const Fsa& l1, const Fsa& l2, int split, int num_gens) {
  Fsa a;
  a.alphabet = signed_alphabet(num_gens);
  a.deterministic = true;
  int start = a.add_state(true);
  std::vector<int> id1(l1.num_states), id2(l2.num_states);
  for (int q = 0; q < l1.num_states; ++q) id1[q] = a.add_state(l1.accepting[q]);
  for (int q = 0; q < l2.num_states; ++q) id2[q] = a.add_state(l2.accepting[q]);
  auto local = [&](Letter l, int f) { return f == 0 ? l : (l > 0 ? l - split : l + split); };
  for (Letter l : a.alphabet) {
    int f = gen_of(l) < split ? 0 : 1;
    const Fsa& lf = f == 0 ? l1 : l2;
    const std::vector<int>& idf = f == 0 ? id1 : id2;
    int first = lf.step(lf.initial, local(l, f));
    if (first >= 0) {
      a.add_trans(start, l, idf[first]);
      // a completed syllable of the other factor may be followed by this one
      const Fsa& lo = f == 0 ? l2 : l1;
      const std::vector<int>& ido = f == 0 ? id2 : id1;
      for (int q = 0; q < lo.num_states; ++q)
        if (lo.accepting[q] && q != lo.initial) a.add_trans(ido[q], l, idf[first]);
      if (lo.accepting[lo.initial]) {
        // the factor initial state doubles as "syllable just finished" only
        // when it is re-entered; builtins never loop back to it
      }
    }
    for (int q = 0; q < lf.num_states; ++q) {
      int t = lf.step(q, local(l, f));
      if (t >= 0) a.add_trans(idf[q], l, idf[t]);
    }
  }
  return a;
}

struct StructureOracle final : GroupOracle {
  AutomaticStructure s;
  Word normal_form(const Word& w) const override { return representative(s, w); }
};

AutomaticStructure finish_builtin(Alphabet alphabet, Fsa acceptor,
                                  std::shared_ptr<const GroupOracle> oracle, bool geodesic) {
  AutomaticStructure s;
  s.alphabet = std::move(alphabet);
  s.word_acceptor = minimize(acceptor);
  s.oracle = std::move(oracle);
  s.unique_reps = true;
  s.geodesic = geodesic;
  int k = s.alphabet.size();
  s.m_eps = identity_pair(s.word_acceptor, k);
  for (int g = 0; g < k; ++g) {
    Word pos{g + 1}, neg{-(g + 1)};
    int bound = static_cast<int>(s.oracle->normal_form(pos).size()) + 6;
    s.mult_pos.push_back(build_multiplier(s.word_acceptor, *s.oracle, k, pos, bound));
    s.mult_neg.push_back(build_multiplier(s.word_acceptor, *s.oracle, k, neg, bound));
  }
  return s;
}

}  // namespace

AutomaticStructure builtin_shortlex_free(const Alphabet& alphabet) {
  return finish_builtin(alphabet, reduced_words_fsa(alphabet.size()),
                        std::make_shared<FreeOracle>(), true);
}

AutomaticStructure builtin_shortlex_abelian(const Alphabet& alphabet) {
  auto oracle = std::make_shared<AbelianOracle>();
  oracle->rank = alphabet.size();
  for (int g = 0; g < alphabet.size(); ++g) {
    IntVec e(alphabet.size(), 0);
    e[g] = 1;
    oracle->letter_vec.push_back(e);
  }
  return finish_builtin(alphabet, abelian_acceptor(alphabet.size(), alphabet.size()), oracle,
                        true);
}

AutomaticStructure builtin_free_product(const AutomaticStructure& s1,
                                        const AutomaticStructure& s2) {
  if (!s1.unique_reps || !s2.unique_reps)
    throw MalformedInput("free product factors need unique representatives");
  Alphabet merged = merge_alphabets(s1.alphabet, s2.alphabet);
  int split = s1.alphabet.size();
  auto oracle = std::make_shared<FreeProductOracle>();
  oracle->split = split;
  auto factor_oracle = [](const AutomaticStructure& s) -> std::shared_ptr<const GroupOracle> {
    if (s.oracle) return s.oracle;
    auto so = std::make_shared<StructureOracle>();
    so->s = s;
    return so;
  };
  oracle->left = factor_oracle(s1);
  oracle->right = factor_oracle(s2);
  Fsa acceptor =
      free_product_acceptor(s1.word_acceptor, s2.word_acceptor, split, merged.size());
  return finish_builtin(merged, acceptor, oracle, s1.geodesic && s2.geodesic);
}

ValidationReport validate(const AutomaticStructure& s, int depth) {
  ValidationReport report;
  // all L-words up to the requested length
  std::vector<Word> words;
  {
    const Fsa& L = s.word_acceptor;
    std::function<void(int, Word&)> dfs = [&](int q, Word& w) {
      if (L.accepting[q]) words.push_back(w);
      if (static_cast<int>(w.size()) == depth) return;
      for (Letter l : L.alphabet) {
        int t = L.step(q, l);
        if (t < 0) continue;
        w.push_back(l);
        dfs(t, w);
        w.pop_back();
      }
    };
    Word w;
    dfs(L.initial, w);
  }
  for (const Word& u : words) {
    ++report.words_checked;
    for (Letter l : signed_alphabet(s.alphabet.size())) {
      Word v;
      try {
        v = cgt::apply(s.multiplier(l), u);
      } catch (const MalformedInput& e) {
        report.violations.push_back("apply failed on " + s.alphabet.format(u) + " * " +
                                    s.alphabet.format_letter(l) + ": " + e.what());
        continue;
      }
      if (!s.word_acceptor.accepts(v))
        report.violations.push_back("image not in L: " + s.alphabet.format(v));
      Word expect = representative(s, concat(u, Word{l}));
      if (v != expect)
        report.violations.push_back("multiplier disagrees with recomputation on " +
                                    s.alphabet.format(u) + " * " + s.alphabet.format_letter(l));
    }
  }
  return report;
}

}  // namespace cgt

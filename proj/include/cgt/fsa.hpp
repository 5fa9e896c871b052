#ifndef CGT_FSA_HPP
#define CGT_FSA_HPP

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cgt/words.hpp"

namespace cgt {

// Finite automaton over an ordered symbol set. Symbols are kept in the
// `alphabet` vector; its order is the lex order used for enumeration.
// Transitions may be nondeterministic unless `deterministic` is set.
template <class Sym>
struct BasicFsa {
  std::vector<Sym> alphabet;
  int num_states = 0;
  int initial = 0;
  std::vector<char> accepting;
  std::vector<std::vector<std::pair<Sym, int>>> trans;  // per source state
  bool deterministic = false;

  int add_state(bool accept = false) {
    accepting.push_back(accept ? 1 : 0);
    trans.emplace_back();
    return num_states++;
  }
  void add_trans(int src, const Sym& s, int dst) { trans[src].emplace_back(s, dst); }

  void successors(int src, const Sym& s, std::vector<int>& out) const {
    for (const auto& [t, dst] : trans[src])
      if (t == s) out.push_back(dst);
  }
  // -1 when undefined; meaningful on deterministic automata only.
  int step(int src, const Sym& s) const {
    for (const auto& [t, dst] : trans[src])
      if (t == s) return dst;
    return -1;
  }

  bool accepts(const std::vector<Sym>& word) const {
    std::set<int> cur{initial};
    for (const Sym& s : word) {
      std::set<int> next;
      std::vector<int> buf;
      for (int q : cur) {
        buf.clear();
        successors(q, s, buf);
        next.insert(buf.begin(), buf.end());
      }
      cur.swap(next);
      if (cur.empty()) return false;
    }
    for (int q : cur)
      if (accepting[q]) return true;
    return false;
  }
};

// Per-state transitions indexed by symbol position in the alphabet vector.
template <class Sym>
struct TransTable {
  std::map<Sym, int> symidx;
  std::vector<std::vector<std::vector<int>>> succ;  // [state][symbol] -> targets
  std::vector<std::vector<int>> det;                // [state][symbol] -> target or -1

  explicit TransTable(const BasicFsa<Sym>& a) {
    for (size_t i = 0; i < a.alphabet.size(); ++i)
      symidx.emplace(a.alphabet[i], static_cast<int>(i));
    succ.assign(a.num_states, std::vector<std::vector<int>>(a.alphabet.size()));
    det.assign(a.num_states, std::vector<int>(a.alphabet.size(), -1));
    for (int q = 0; q < a.num_states; ++q)
      for (const auto& [s, dst] : a.trans[q]) {
        int i = symidx.at(s);
        succ[q][i].push_back(dst);
        det[q][i] = dst;
      }
  }
};

template <class Sym>
BasicFsa<Sym> determinize(const BasicFsa<Sym>& a) {
  TransTable<Sym> tt(a);
  BasicFsa<Sym> d;
  d.alphabet = a.alphabet;
  d.deterministic = true;
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> queue;
  auto intern = [&](const std::vector<int>& ss) {
    auto it = ids.find(ss);
    if (it != ids.end()) return it->second;
    bool acc = false;
    for (int q : ss) acc = acc || a.accepting[q];
    int id = d.add_state(acc);
    ids.emplace(ss, id);
    queue.push_back(ss);
    return id;
  };
  d.initial = intern({a.initial});
  while (!queue.empty()) {
    std::vector<int> ss = queue.front();
    queue.pop_front();
    int sid = ids.at(ss);
    for (size_t i = 0; i < d.alphabet.size(); ++i) {
      std::set<int> next;
      for (int q : ss) next.insert(tt.succ[q][i].begin(), tt.succ[q][i].end());
      if (next.empty()) continue;
      d.add_trans(sid, d.alphabet[i], intern(std::vector<int>(next.begin(), next.end())));
    }
  }
  return d;
}

// States that can reach an accepting state.
template <class Sym>
std::vector<char> coreachable(const BasicFsa<Sym>& a) {
  std::vector<std::vector<int>> rev(a.num_states);
  for (int q = 0; q < a.num_states; ++q)
    for (const auto& [s, dst] : a.trans[q]) rev[dst].push_back(q);
  std::vector<char> mark(a.num_states, 0);
  std::deque<int> queue;
  for (int q = 0; q < a.num_states; ++q)
    if (a.accepting[q]) {
      mark[q] = 1;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int p : rev[q])
      if (!mark[p]) {
        mark[p] = 1;
        queue.push_back(p);
      }
  }
  return mark;
}

// Moore partition refinement on a (partial) DFA; missing transitions act as
// a rejecting sink. Dead states are dropped afterwards.
template <class Sym>
BasicFsa<Sym> minimize(const BasicFsa<Sym>& in) {
  BasicFsa<Sym> a = in.deterministic ? in : determinize(in);
  if (a.num_states == 0) {
    a.add_state(false);
    a.initial = 0;
  }
  TransTable<Sym> tt(a);
  std::vector<int> cls(a.num_states);
  bool any_rej = false;
  for (int q = 0; q < a.num_states; ++q) any_rej = any_rej || !a.accepting[q];
  for (int q = 0; q < a.num_states; ++q) cls[q] = (a.accepting[q] && any_rej) ? 1 : 0;
  int num_cls = 1 + (any_rej && std::find(a.accepting.begin(), a.accepting.end(), 1) !=
                                    a.accepting.end()
                         ? 1
                         : 0);
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(a.num_states);
    std::vector<int> sig(a.alphabet.size() + 1);
    for (int q = 0; q < a.num_states; ++q) {
      sig[0] = cls[q];
      for (size_t i = 0; i < a.alphabet.size(); ++i) {
        int t = tt.det[q][i];
        sig[i + 1] = t < 0 ? -1 : cls[t];
      }
      auto [it, fresh] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size()));
      (void)fresh;
      next_cls[q] = it->second;
    }
    if (static_cast<int>(sig_ids.size()) == num_cls) break;
    num_cls = static_cast<int>(sig_ids.size());
    cls = next_cls;
  }
  // quotient
  BasicFsa<Sym> m;
  m.alphabet = a.alphabet;
  m.deterministic = true;
  std::vector<int> rep(num_cls, -1);
  for (int q = 0; q < a.num_states; ++q)
    if (rep[cls[q]] < 0) rep[cls[q]] = q;
  std::vector<int> remap(num_cls, -1);
  // breadth-first from the initial class for stable numbering
  std::deque<int> queue{cls[a.initial]};
  remap[cls[a.initial]] = m.add_state(a.accepting[a.initial]);
  m.initial = 0;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    int q = rep[c];
    for (const Sym& s : m.alphabet) {
      int t = a.step(q, s);
      if (t < 0) continue;
      int tc = cls[t];
      if (remap[tc] < 0) {
        remap[tc] = m.add_state(a.accepting[t]);
        queue.push_back(tc);
      }
      m.add_trans(remap[c], s, remap[tc]);
    }
  }
  // prune dead states (not co-reachable), keeping the initial state
  std::vector<char> live = coreachable(m);
  BasicFsa<Sym> out;
  out.alphabet = m.alphabet;
  out.deterministic = true;
  std::vector<int> id(m.num_states, -1);
  for (int q = 0; q < m.num_states; ++q)
    if (live[q] || q == m.initial) id[q] = out.add_state(m.accepting[q]);
  out.initial = id[m.initial];
  for (int q = 0; q < m.num_states; ++q) {
    if (id[q] < 0) continue;
    for (const auto& [s, dst] : m.trans[q])
      if (id[dst] >= 0 && live[dst]) out.add_trans(id[q], s, id[dst]);
  }
  return out;
}

// Binary boolean combination of two automata over the same alphabet.
template <class Sym>
BasicFsa<Sym> product_fsa(const BasicFsa<Sym>& a0, const BasicFsa<Sym>& b0,
                          const std::function<bool(bool, bool)>& keep) {
  if (a0.alphabet != b0.alphabet) throw MalformedInput("alphabet mismatch");
  BasicFsa<Sym> a = a0.deterministic ? a0 : determinize(a0);
  BasicFsa<Sym> b = b0.deterministic ? b0 : determinize(b0);
  BasicFsa<Sym> p;
  p.alphabet = a.alphabet;
  p.deterministic = true;
  // -1 stands for the implicit sink of either side
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> queue;
  auto intern = [&](int qa, int qb) {
    auto key = std::make_pair(qa, qb);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    bool acc = keep(qa >= 0 && a.accepting[qa], qb >= 0 && b.accepting[qb]);
    int id = p.add_state(acc);
    ids.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  p.initial = intern(a.initial, b.initial);
  while (!queue.empty()) {
    auto [qa, qb] = queue.front();
    queue.pop_front();
    int sid = ids.at({qa, qb});
    for (const Sym& s : p.alphabet) {
      int ta = qa < 0 ? -1 : a.step(qa, s);
      int tb = qb < 0 ? -1 : b.step(qb, s);
      if (ta < 0 && tb < 0) continue;
      p.add_trans(sid, s, intern(ta, tb));
    }
  }
  return minimize(p);
}

template <class Sym>
BasicFsa<Sym> intersect_fsa(const BasicFsa<Sym>& a, const BasicFsa<Sym>& b) {
  return product_fsa<Sym>(a, b, [](bool x, bool y) { return x && y; });
}
template <class Sym>
BasicFsa<Sym> union_fsa(const BasicFsa<Sym>& a, const BasicFsa<Sym>& b) {
  return product_fsa<Sym>(a, b, [](bool x, bool y) { return x || y; });
}
template <class Sym>
BasicFsa<Sym> difference_fsa(const BasicFsa<Sym>& a, const BasicFsa<Sym>& b) {
  return product_fsa<Sym>(a, b, [](bool x, bool y) { return x && !y; });
}

// Complement with respect to all of Sym*.
template <class Sym>
BasicFsa<Sym> complement_fsa(const BasicFsa<Sym>& a0) {
  BasicFsa<Sym> a = minimize(a0);
  // complete with a sink, then flip
  BasicFsa<Sym> c = a;
  int sink = c.add_state(false);
  for (int q = 0; q < c.num_states; ++q)
    for (const Sym& s : c.alphabet)
      if (c.step(q, s) < 0) c.add_trans(q, s, sink);
  for (int q = 0; q < c.num_states; ++q) c.accepting[q] = !c.accepting[q];
  return minimize(c);
}

template <class Sym>
bool is_empty_fsa(const BasicFsa<Sym>& a) {
  std::vector<char> live = coreachable(a);
  // coreachable already implies an accepting state exists below; check from initial
  std::vector<char> seen(a.num_states, 0);
  std::deque<int> queue{a.initial};
  seen[a.initial] = 1;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    if (a.accepting[q]) return false;
    for (const auto& [s, dst] : a.trans[q])
      if (!seen[dst]) {
        seen[dst] = 1;
        queue.push_back(dst);
      }
  }
  (void)live;
  return true;
}

// Finite language test: no cycle through a useful (reachable + co-reachable)
// state.
template <class Sym>
bool is_finite_fsa(const BasicFsa<Sym>& a) {
  std::vector<char> co = coreachable(a);
  std::vector<char> reach(a.num_states, 0);
  std::deque<int> queue{a.initial};
  reach[a.initial] = 1;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (const auto& [s, dst] : a.trans[q])
      if (!reach[dst]) {
        reach[dst] = 1;
        queue.push_back(dst);
      }
  }
  auto useful = [&](int q) { return reach[q] && co[q]; };
  // DFS cycle detection restricted to useful states
  std::vector<int> color(a.num_states, 0);
  std::function<bool(int)> dfs = [&](int q) -> bool {
    color[q] = 1;
    for (const auto& [s, dst] : a.trans[q]) {
      if (!useful(dst)) continue;
      if (color[dst] == 1) return true;
      if (color[dst] == 0 && dfs(dst)) return true;
    }
    color[q] = 2;
    return false;
  };
  for (int q = 0; q < a.num_states; ++q)
    if (useful(q) && color[q] == 0 && dfs(q)) return false;
  return true;
}

// The n least accepted words in shortlex order (length, then alphabet order).
template <class Sym>
std::vector<std::vector<Sym>> enumerate_fsa(const BasicFsa<Sym>& a0, int n) {
  BasicFsa<Sym> a = a0.deterministic ? a0 : determinize(a0);
  std::vector<std::vector<Sym>> out;
  if (n <= 0) return out;
  // min distance to acceptance per state
  std::vector<int> dist(a.num_states, -1);
  {
    std::vector<std::vector<int>> rev(a.num_states);
    for (int q = 0; q < a.num_states; ++q)
      for (const auto& [s, dst] : a.trans[q]) rev[dst].push_back(q);
    std::deque<int> queue;
    for (int q = 0; q < a.num_states; ++q)
      if (a.accepting[q]) {
        dist[q] = 0;
        queue.push_back(q);
      }
    while (!queue.empty()) {
      int q = queue.front();
      queue.pop_front();
      for (int p : rev[q])
        if (dist[p] < 0) {
          dist[p] = dist[q] + 1;
          queue.push_back(p);
        }
    }
  }
  if (dist[a.initial] < 0) return out;
  bool finite = is_finite_fsa(a);
  std::vector<Sym> word;
  std::function<void(int, int)> dfs = [&](int q, int remaining) {
    if (static_cast<int>(out.size()) >= n) return;
    if (remaining == 0) {
      if (a.accepting[q]) out.push_back(word);
      return;
    }
    for (const Sym& s : a.alphabet) {
      int t = a.step(q, s);
      if (t < 0 || dist[t] < 0 || dist[t] > remaining - 1) continue;
      word.push_back(s);
      dfs(t, remaining - 1);
      word.pop_back();
      if (static_cast<int>(out.size()) >= n) return;
    }
  };
  for (int len = 0; static_cast<int>(out.size()) < n; ++len) {
    if (finite && len > a.num_states) break;
    dfs(a.initial, len);
  }
  return out;
}

template <class Sym>
std::optional<std::vector<Sym>> shortlex_least(const BasicFsa<Sym>& a) {
  auto v = enumerate_fsa(a, 1);
  if (v.empty()) return std::nullopt;
  return v[0];
}

// subset test with shortlex-least witness on failure
template <class Sym>
std::pair<bool, std::optional<std::vector<Sym>>> subset_fsa(const BasicFsa<Sym>& a,
                                                            const BasicFsa<Sym>& b) {
  BasicFsa<Sym> diff = difference_fsa(a, b);
  auto w = shortlex_least(diff);
  if (w) return {false, w};
  return {true, std::nullopt};
}

// ---- Word automata (symbols are signed letters) ----

using Fsa = BasicFsa<Letter>;

// alphabet-with-inverses in shortlex letter order
std::vector<Letter> signed_alphabet(int num_gens);

// DFA of all freely reduced words over num_gens generators.
Fsa reduced_words_fsa(int num_gens);

// Complement relative to the freely reduced words.
Fsa complement_reduced(const Fsa& a, int num_gens);

// DFA accepting exactly {w}.
Fsa single_word_fsa(const Word& w, int num_gens);

// DFA accepting a finite set of words.
Fsa word_set_fsa(const std::vector<Word>& words, int num_gens);

}  // namespace cgt

#endif

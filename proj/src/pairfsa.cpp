#include "cgt/pairfsa.hpp"

#include <deque>
#include <map>
#include <set>

namespace cgt {

namespace {

// NFA over letters with epsilon edges, used for projections.
struct EpsNfa {
  std::vector<Letter> alphabet;
  int num_states = 0;
  int initial = 0;
  std::vector<char> accepting;
  std::vector<std::vector<std::pair<Letter, int>>> trans;
  std::vector<std::vector<int>> eps;

  int add_state(bool acc) {
    accepting.push_back(acc ? 1 : 0);
    trans.emplace_back();
    eps.emplace_back();
    return num_states++;
  }
};

void eps_close(const EpsNfa& n, std::set<int>& ss) {
  std::deque<int> queue(ss.begin(), ss.end());
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int t : n.eps[q])
      if (ss.insert(t).second) queue.push_back(t);
  }
}

Fsa eps_nfa_to_dfa(const EpsNfa& n) {
  Fsa d;
  d.alphabet = n.alphabet;
  d.deterministic = true;
  std::map<std::set<int>, int> ids;
  std::deque<std::set<int>> queue;
  auto intern = [&](std::set<int> ss) {
    eps_close(n, ss);
    auto it = ids.find(ss);
    if (it != ids.end()) return it->second;
    bool acc = false;
    for (int q : ss) acc = acc || n.accepting[q];
    int id = d.add_state(acc);
    ids.emplace(ss, id);
    queue.push_back(ss);
    return id;
  };
  d.initial = intern({n.initial});
  while (!queue.empty()) {
    std::set<int> ss = queue.front();
    queue.pop_front();
    int sid = ids.at(ss);
    for (Letter s : d.alphabet) {
      std::set<int> next;
      for (int q : ss)
        for (const auto& [t, dst] : n.trans[q])
          if (t == s) next.insert(dst);
      if (next.empty()) continue;
      d.add_trans(sid, s, intern(next));
    }
  }
  return minimize(d);
}

Fsa project(const PairFsa& r, bool second) {
  EpsNfa n;
  n.alphabet = signed_alphabet(r.num_gens);
  for (int q = 0; q < r.core.num_states; ++q) n.add_state(r.core.accepting[q]);
  n.initial = r.core.initial;
  for (int q = 0; q < r.core.num_states; ++q)
    for (const auto& [sym, dst] : r.core.trans[q]) {
      Letter out = second ? sym.second : sym.first;
      if (out == 0)
        n.eps[q].push_back(dst);
      else
        n.trans[q].emplace_back(out, dst);
    }
  return eps_nfa_to_dfa(n);
}

}  // namespace

std::vector<PairSym> pair_alphabet(int num_gens) {
  std::vector<Letter> sigma = signed_alphabet(num_gens);
  sigma.push_back(0);  // pad last in the order
  std::vector<PairSym> out;
  for (Letter a : sigma)
    for (Letter b : sigma)
      if (!(a == 0 && b == 0)) out.emplace_back(a, b);
  return out;
}

std::vector<PairSym> convolution(const Word& u, const Word& v) {
  std::vector<PairSym> out;
  size_t n = std::max(u.size(), v.size());
  for (size_t i = 0; i < n; ++i)
    out.emplace_back(i < u.size() ? u[i] : 0, i < v.size() ? v[i] : 0);
  return out;
}

bool accepts_pair(const PairFsa& r, const Word& u, const Word& v) {
  return r.core.accepts(convolution(u, v));
}

PairFsa identity_pair(const Fsa& lang0, int num_gens) {
  Fsa lang = lang0.deterministic ? lang0 : determinize(lang0);
  PairFsa r;
  r.num_gens = num_gens;
  r.core.alphabet = pair_alphabet(num_gens);
  r.core.deterministic = true;
  for (int q = 0; q < lang.num_states; ++q) r.core.add_state(lang.accepting[q]);
  r.core.initial = lang.initial;
  for (int q = 0; q < lang.num_states; ++q)
    for (const auto& [s, dst] : lang.trans[q]) r.core.add_trans(q, {s, s}, dst);
  r.core = minimize(r.core);
  return r;
}

PairFsa empty_pair(int num_gens) {
  PairFsa r;
  r.num_gens = num_gens;
  r.core.alphabet = pair_alphabet(num_gens);
  r.core.deterministic = true;
  r.core.add_state(false);
  return r;
}

PairFsa compose(const PairFsa& r, const PairFsa& s) {
  if (r.num_gens != s.num_gens) throw MalformedInput("pair alphabet mismatch");
  BasicFsa<PairSym> n;
  n.alphabet = pair_alphabet(r.num_gens);
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> queue;
  auto intern = [&](int qr, int qs) {
    auto key = std::make_pair(qr, qs);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = n.add_state(false);
    ids.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  std::vector<std::vector<int>> silent;  // src -> dsts, for (pad, x, pad) moves
  n.initial = intern(r.core.initial, s.core.initial);
  silent.resize(1);
  while (!queue.empty()) {
    auto [qr, qs] = queue.front();
    queue.pop_front();
    int sid = ids.at({qr, qs});
    for (const auto& [rs, rd] : r.core.trans[qr]) {
      for (const auto& [ss_, sd] : s.core.trans[qs]) {
        if (rs.second != ss_.first) continue;  // middle tape must agree
        int tid = intern(rd, sd);
        if (static_cast<int>(silent.size()) < n.num_states) silent.resize(n.num_states);
        if (rs.first == 0 && ss_.second == 0)
          silent[sid].push_back(tid);
        else
          n.add_trans(sid, {rs.first, ss_.second}, tid);
      }
    }
    // one side's convolution may end while the other's visible tape goes on:
    // the finished relation idles at an accepting state, the middle tape pads
    if (r.core.accepting[qr])
      for (const auto& [ss_, sd] : s.core.trans[qs])
        if (ss_.first == 0) {
          int tid = intern(qr, sd);
          if (static_cast<int>(silent.size()) < n.num_states) silent.resize(n.num_states);
          n.add_trans(sid, {0, ss_.second}, tid);
        }
    if (s.core.accepting[qs])
      for (const auto& [rs, rd] : r.core.trans[qr])
        if (rs.second == 0) {
          int tid = intern(rd, qs);
          if (static_cast<int>(silent.size()) < n.num_states) silent.resize(n.num_states);
          n.add_trans(sid, {rs.first, 0}, tid);
        }
  }
  silent.resize(n.num_states);
  // A state accepts if a chain of silent moves (padding on both visible
  // tapes while the middle tape finishes) reaches a jointly accepting state.
  std::vector<char> acc(n.num_states, 0);
  for (const auto& [key, id] : ids)
    if (r.core.accepting[key.first] && s.core.accepting[key.second]) acc[id] = 1;
  std::vector<std::vector<int>> rev(n.num_states);
  for (int q = 0; q < n.num_states; ++q)
    for (int t : silent[q]) rev[t].push_back(q);
  std::deque<int> bfs;
  for (int q = 0; q < n.num_states; ++q)
    if (acc[q]) bfs.push_back(q);
  while (!bfs.empty()) {
    int q = bfs.front();
    bfs.pop_front();
    for (int p : rev[q])
      if (!acc[p]) {
        acc[p] = 1;
        bfs.push_back(p);
      }
  }
  for (int q = 0; q < n.num_states; ++q) n.accepting[q] = acc[q];
  PairFsa out;
  out.num_gens = r.num_gens;
  out.core = minimize(n);
  return out;
}

Fsa image(const PairFsa& r, const Fsa& a0) {
  Fsa a = a0.deterministic ? a0 : determinize(a0);
  EpsNfa n;
  n.alphabet = signed_alphabet(r.num_gens);
  // states: (pair state, a state or -1 once a's tape is exhausted)
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> queue;
  auto intern = [&](int qp, int qa) {
    auto key = std::make_pair(qp, qa);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    bool acc = r.core.accepting[qp] && (qa < 0 || a.accepting[qa]);
    int id = n.add_state(acc);
    ids.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  n.initial = intern(r.core.initial, a.initial);
  while (!queue.empty()) {
    auto [qp, qa] = queue.front();
    queue.pop_front();
    int sid = ids.at({qp, qa});
    for (const auto& [sym, dst] : r.core.trans[qp]) {
      int ta;
      if (sym.first == 0) {
        if (qa >= 0 && !a.accepting[qa]) continue;  // pad only after a full word
        ta = -1;
      } else {
        if (qa < 0) continue;
        ta = a.step(qa, sym.first);
        if (ta < 0) continue;
      }
      int tid = intern(dst, ta);
      if (sym.second == 0)
        n.eps[sid].push_back(tid);
      else
        n.trans[sid].emplace_back(sym.second, tid);
    }
  }
  return eps_nfa_to_dfa(n);
}

Fsa domain_fsa(const PairFsa& r) { return project(r, false); }
Fsa range_fsa(const PairFsa& r) { return project(r, true); }

PairFsa restrict_pair(const PairFsa& r, const Fsa& a0, const Fsa& b0) {
  Fsa a = a0.deterministic ? a0 : determinize(a0);
  Fsa b = b0.deterministic ? b0 : determinize(b0);
  // lift a to the first coordinate and b to the second, intersect with r
  auto lift = [&](const Fsa& lang, bool first) {
    BasicFsa<PairSym> l;
    l.alphabet = pair_alphabet(r.num_gens);
    l.deterministic = true;
    // state ids: 0..n-1 mirror lang, n = done (tape exhausted)
    for (int q = 0; q < lang.num_states; ++q) l.add_state(lang.accepting[q]);
    int done = l.add_state(true);
    l.initial = lang.initial;
    for (const PairSym& sym : l.alphabet) {
      Letter mine = first ? sym.first : sym.second;
      for (int q = 0; q < lang.num_states; ++q) {
        if (mine == 0) {
          if (lang.accepting[q]) l.add_trans(q, sym, done);
        } else {
          int t = lang.step(q, mine);
          if (t >= 0) l.add_trans(q, sym, t);
        }
      }
      if (mine == 0) l.add_trans(done, sym, done);
    }
    return l;
  };
  PairFsa out;
  out.num_gens = r.num_gens;
  out.core = intersect_fsa(r.core, lift(a, true));
  out.core = intersect_fsa(out.core, lift(b, false));
  return out;
}

Word apply(const PairFsa& r, const Word& u) {
  Fsa img = image(r, single_word_fsa(u, r.num_gens));
  auto words = enumerate_fsa(img, 2);
  if (words.empty()) throw MalformedInput("apply: word outside relation domain");
  if (words.size() > 1) throw MalformedInput("apply: relation not functional");
  return words[0];
}

bool pair_is_empty(const PairFsa& r) { return is_empty_fsa(r.core); }

std::optional<std::pair<Word, Word>> least_pair(const PairFsa& r) {
  auto w = shortlex_least(r.core);
  if (!w) return std::nullopt;
  Word u, v;
  for (const PairSym& s : *w) {
    if (s.first != 0) u.push_back(s.first);
    if (s.second != 0) v.push_back(s.second);
  }
  return std::make_pair(u, v);
}

}  // namespace cgt

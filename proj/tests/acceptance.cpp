// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own time budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <random>
#include <set>
#include <tuple>

#include "cgt/oracles.hpp"
#include "cgt/relhyp.hpp"

using namespace cgt;

namespace {

int failures = 0;
std::vector<std::string> problems;

void report(int num, const std::string& name, bool ok, double seconds, double limit,
            const std::string& detail) {
  bool in_time = seconds <= limit;
  std::printf("%s  [%d] %s: %s (%.2fs, limit %.0fs)\n", ok && in_time ? "PASS" : "FAIL", num,
              name.c_str(), detail.c_str(), seconds, limit);
  if (!ok || !in_time) ++failures;
  for (size_t i = 0; i < problems.size() && i < 3; ++i)
    std::printf("      - %s\n", problems[i].c_str());
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

bool expect(bool cond, const std::string& what) {
  if (!cond) problems.push_back(what);
  return cond;
}

Word random_reduced(std::mt19937& rng, int num_gens, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> gen_dist(1, num_gens);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word w;
  int len = len_dist(rng);
  while (static_cast<int>(w.size()) < len) {
    Letter l = gen_dist(rng) * (sign_dist(rng) ? 1 : -1);
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
  }
  return w;
}

// independent quadratic folder, duplicated from the unit suite on purpose
StallingsGraph naive_fold(GraphBuilder b) {
  auto relabel = [&](int from, int to) {
    if (b.base == from) b.base = to;
    for (auto& e : b.edges) {
      if (e.src == from) e.src = to;
      if (e.dst == from) e.dst = to;
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < b.edges.size() && !changed; ++i)
      for (size_t j = i + 1; j < b.edges.size() && !changed; ++j) {
        const auto& e = b.edges[i];
        const auto& f = b.edges[j];
        if (e.gen != f.gen) continue;
        if (e.src == f.src && e.dst != f.dst) {
          relabel(std::max(e.dst, f.dst), std::min(e.dst, f.dst));
          changed = true;
        } else if (e.dst == f.dst && e.src != f.src) {
          relabel(std::max(e.src, f.src), std::min(e.src, f.src));
          changed = true;
        }
      }
    std::sort(b.edges.begin(), b.edges.end(), [](const auto& x, const auto& y) {
      return std::tie(x.src, x.gen, x.dst) < std::tie(y.src, y.gen, y.dst);
    });
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end(),
                              [](const auto& x, const auto& y) {
                                return std::tie(x.src, x.gen, x.dst) ==
                                       std::tie(y.src, y.gen, y.dst);
                              }),
                  b.edges.end());
  }
  std::map<int, int> id;
  auto intern = [&](int v) {
    auto [it, fresh] = id.emplace(v, static_cast<int>(id.size()));
    (void)fresh;
    return it->second;
  };
  StallingsGraph g;
  g.alphabet = b.alphabet;
  g.base = intern(b.base);
  for (const auto& e : b.edges) {
    intern(e.src);
    intern(e.dst);
  }
  for (size_t i = 0; i < id.size(); ++i) g.add_vertex();
  for (const auto& e : b.edges) {
    g.out[id.at(e.src)][e.gen] = id.at(e.dst);
    g.in[id.at(e.dst)][e.gen] = id.at(e.src);
  }
  return g;
}

void criterion1() {
  Timer timer;
  problems.clear();
  Alphabet ab({"a", "b"});
  std::mt19937 rng(1001);
  std::uniform_int_distribution<int> count_dist(1, 3), pick_dist(0, 2), sign_dist(0, 1);
  int instances = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> gens;
    int k = count_dist(rng);
    for (int i = 0; i < k; ++i) gens.push_back(random_reduced(rng, 2, 6));
    GraphBuilder b = bouquet(ab, gens);
    StallingsGraph fast = fold(b);
    StallingsGraph slow = naive_fold(b);
    expect(isomorphic(fast, slow), "fold mismatch vs naive reference");
    StallingsGraph g = trim(fast);
    // random products of the generators are members
    for (int rep = 0; rep < 3; ++rep) {
      Word prod;
      for (int i = 0; i < 4; ++i) {
        Word h = gens[pick_dist(rng) % gens.size()];
        prod = concat(prod, sign_dist(rng) ? inverse(h) : h);
      }
      expect(membership_free(g, free_reduce(prod)), "member product rejected");
    }
    // the free brute-force oracle agrees where it can reach
    Word w = random_reduced(rng, 2, 5);
    if (free_membership_bruteforce(gens, w, 5))
      expect(membership_free(g, w), "oracle member rejected by the graph");
    // structural invariants: rank = E - V + 1 on the core
    auto [rank, basis] = rank_and_basis(g);
    expect(rank == g.num_edges() - g.num_vertices() + 1, "rank formula violated");
    expect(static_cast<int>(basis.size()) == rank, "basis size != rank");
    for (const Word& bw : basis) expect(membership_free(g, bw), "basis word not a member");
    ++instances;
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%d random instances, %zu violations", instances,
                problems.size());
  report(1, "free-group suite", problems.empty(), timer.elapsed(), 10.0, detail);
}

void criterion2() {
  Timer timer;
  problems.clear();
  int positives = 0;

  struct FiniteCase {
    Presentation p;
    std::vector<Perm> images;
    std::vector<std::vector<Word>> gen_sets;
  };
  std::vector<FiniteCase> cases;
  {
    FiniteCase s3;
    s3.p.alphabet = Alphabet({"s", "t"});
    s3.p.relators = {s3.p.alphabet.parse("s*s"), s3.p.alphabet.parse("t*t"),
                     s3.p.alphabet.parse("s*t*s*t*s*t")};
    s3.images = {{1, 0, 2}, {0, 2, 1}};
    s3.gen_sets = {{s3.p.alphabet.parse("s")},
                   {s3.p.alphabet.parse("s*t")},
                   {s3.p.alphabet.parse("s"), s3.p.alphabet.parse("t")}};
    cases.push_back(s3);

    FiniteCase z4;
    z4.p.alphabet = Alphabet({"r"});
    z4.p.relators = {z4.p.alphabet.parse("r*r*r*r")};
    z4.images = {{1, 2, 3, 0}};
    z4.gen_sets = {{z4.p.alphabet.parse("r*r")}, {z4.p.alphabet.parse("r")}};
    cases.push_back(z4);

    FiniteCase d4;
    d4.p.alphabet = Alphabet({"r", "f"});
    d4.p.relators = {d4.p.alphabet.parse("r*r*r*r"), d4.p.alphabet.parse("f*f"),
                     d4.p.alphabet.parse("r*f*r*f")};
    d4.images = {{1, 2, 3, 0}, {0, 3, 2, 1}};
    d4.gen_sets = {{d4.p.alphabet.parse("r")},
                   {d4.p.alphabet.parse("f"), d4.p.alphabet.parse("r*r")}};
    cases.push_back(d4);

    FiniteCase a4;
    a4.p.alphabet = Alphabet({"s", "t"});
    a4.p.relators = {a4.p.alphabet.parse("s*s"), a4.p.alphabet.parse("t*t*t"),
                     a4.p.alphabet.parse("s*t*s*t*s*t")};
    a4.images = {{1, 0, 3, 2}, {1, 2, 0, 3}};
    a4.gen_sets = {{a4.p.alphabet.parse("t")}, {a4.p.alphabet.parse("s"), a4.p.alphabet.parse("t")}};
    cases.push_back(a4);
  }
  for (const FiniteCase& c : cases) {
    // sanity: the permutation model satisfies the relators
    for (const Word& r : c.p.relators)
      expect(perm_of_word(c.images, r) ==
                 perm_identity(static_cast<int>(c.images[0].size())),
             "permutation model breaks a relator");
    std::vector<Word> targets;
    // all words of length <= 3
    std::function<void(Word&)> gen_targets = [&](Word& w) {
      targets.push_back(w);
      if (w.size() >= 3) return;
      for (int g = 1; g <= c.p.alphabet.size(); ++g)
        for (Letter l : {g, -g}) {
          w.push_back(l);
          gen_targets(w);
          w.pop_back();
        }
    };
    Word scratch;
    gen_targets(scratch);
    for (const auto& gens : c.gen_sets)
      for (const Word& g : targets) {
        bool oracle = perm_membership(c.images, gens, g);
        CompletionResult r = run_completion(c.p, gens, g, 15);
        if (oracle) {
          if (expect(std::holds_alternative<Member>(r), "oracle positive missed in 15 rounds"))
            ++positives;
        } else {
          expect(std::holds_alternative<BudgetExhausted>(r), "false positive from completion");
        }
      }
  }
  // Z^2 against the lattice oracle
  {
    Presentation p;
    p.alphabet = Alphabet({"a", "b"});
    p.relators = {p.alphabet.parse("a*b*a^-1*b^-1")};
    std::vector<std::vector<Word>> gen_sets = {
        {p.alphabet.parse("a*a"), p.alphabet.parse("b")},
        {p.alphabet.parse("a*b")},
    };
    std::vector<Word> targets = {p.alphabet.parse("b*a*a"), p.alphabet.parse("a*a*b*b"),
                                 p.alphabet.parse("b*a"),   p.alphabet.parse("a"),
                                 p.alphabet.parse("a*b*a*b"), p.alphabet.parse("a^-1*b^-1")};
    for (const auto& gens : gen_sets)
      for (const Word& g : targets) {
        bool oracle = abelian_membership(2, gens, g);
        CompletionResult r = run_completion(p, gens, g, 15);
        if (oracle) {
          if (expect(std::holds_alternative<Member>(r), "Z^2 positive missed in 15 rounds"))
            ++positives;
        } else {
          expect(std::holds_alternative<BudgetExhausted>(r), "Z^2 false positive");
        }
      }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%d oracle positives completed, %zu violations",
                positives, problems.size());
  report(2, "completion suite", problems.empty() && positives >= 30, timer.elapsed(), 30.0,
         detail);
}

void criterion3() {
  Timer timer;
  problems.clear();
  Alphabet ab({"a", "b"});
  AutomaticStructure free2 = builtin_shortlex_free(ab);
  std::mt19937 rng(3003);
  std::uniform_int_distribution<int> count_dist(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Word> gens;
    int k = count_dist(rng);
    for (int i = 0; i < k; ++i) gens.push_back(random_reduced(rng, 2, 5));
    LStallingsResult r = compute_l_stallings(free2, gens, 40);
    if (!expect(std::holds_alternative<LStallingsGraph>(r), "free tuple failed to certify"))
      continue;
    expect(isomorphic(std::get<LStallingsGraph>(r).graph, stallings_graph(ab, gens)),
           "free L-graph differs from the classical graph");
  }
  AutomaticStructure z2 = builtin_shortlex_abelian(ab);
  LStallingsResult r = compute_l_stallings(z2, {{1, 1}, {2}}, 40);
  if (expect(std::holds_alternative<LStallingsGraph>(r), "<a^2,b> failed to certify")) {
    const LStallingsGraph& g = std::get<LStallingsGraph>(r);
    expect(g.graph.num_vertices() == 2, "<a^2,b> graph is not the 2-vertex graph");
    for (int x = -4; x <= 4; ++x)
      for (int y = -3; y <= 3; ++y) {
        Word w = vector_to_word({x, y});
        if (w.size() > 8) continue;
        expect(membership_l(g, w) == (x % 2 == 0), "<a^2,b> membership disagrees with parity");
      }
  }
  LStallingsResult nq = compute_l_stallings(z2, {{1, 1, 2}}, 30);
  expect(std::holds_alternative<LBudgetExhausted>(nq),
         "<a^2*b> certified although it is not L-quasi-convex");
  char detail[128];
  std::snprintf(detail, sizeof(detail), "20 free tuples + Z^2 cases, %zu violations",
                problems.size());
  report(3, "L-Stallings suite", problems.empty(), timer.elapsed(), 30.0, detail);
}

void criterion4() {
  Timer timer;
  problems.clear();
  RelHypInstance inst = make_toral_instance();
  const Alphabet& a = inst.presentation.alphabet;
  const Alphabet& x = inst.structure.alphabet;
  int members = 0, non_members = 0, contradictions = 0;

  struct Case {
    std::vector<std::string> gens;
    IntMat lattice;  // rows over (a, b)
    int t_divisor;
    std::vector<std::string> targets;
  };
  std::vector<Case> cases = {
      {{"t"}, {}, 1, {"t*t", "t^-1", "t*t*t", "a", "b", "a*t", "t*a*t^-1"}},
      {{"a"}, {{1, 0}}, 0, {"a", "a*a", "a^-1*a^-1", "a*a*a", "b", "t", "a*b", "t*a*t^-1"}},
      {{"a*a", "b", "t"},
       {{2, 0}, {0, 1}},
       1,
       {"a*a", "b", "t", "a*a*b^-1", "t*a*a*t^-1", "b*a*b*a", "a", "a*b*t", "t*a*t^-1"}},
  };
  for (const Case& c : cases) {
    std::vector<Word> gens;
    for (const std::string& s : c.gens) gens.push_back(a.parse(s));
    LatticeSubgroup lat = hnf(2, c.lattice);
    for (const std::string& ts : c.targets) {
      Word g = a.parse(ts);
      bool oracle = toral_membership(lat, c.t_divisor, g);
      MembershipVerdict v;
      try {
        v = decide_membership(inst, gens, g, 40);
      } catch (const ContradictionError&) {
        ++contradictions;
        continue;
      }
      if (oracle) {
        if (expect(std::holds_alternative<MemberVerdict>(v),
                   "oracle member not confirmed: " + ts))
          ++members;
      } else {
        if (expect(std::holds_alternative<NonMemberVerdict>(v),
                   "oracle non-member not refuted: " + ts)) {
          ++non_members;
          const auto& nm = std::get<NonMemberVerdict>(v);
          // re-verify the certificate: H inside H1, g outside, peripheral
          // rows of finite index
          expect(nm.certificate.certified, "uncertified certificate");
          for (const Word& h : gens)
            expect(membership_l(nm.certificate, translate_word(a, x, h)),
                   "certificate drops a subgroup generator");
          expect(!membership_l(nm.certificate, translate_word(a, x, g)),
                 "certificate admits the excluded element");
          for (const auto& item : nm.candidate.items)
            expect(finite_index(hnf(inst.peripherals.peripherals[item.peripheral].rank,
                                    item.tuple))
                       .has_value(),
                   "candidate tuple is not finite index");
        }
      }
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%d members, %d non-members, %d contradictions, %zu violations", members,
                non_members, contradictions, problems.size());
  report(4, "relative membership suite",
         problems.empty() && members >= 10 && non_members >= 10 && contradictions == 0,
         timer.elapsed(), 300.0, detail);
}

void criterion5() {
  Timer timer;
  problems.clear();
  std::mt19937 rng(5005);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 3;
    IntMat rows(n, IntVec(n));
    for (auto& r : rows)
      for (auto& v : r) v = entry(rng);
    LatticeSubgroup s = hnf(n, rows);
    IntMat mixed = rows;
    std::uniform_int_distribution<int> idx(0, n - 1), coef(-3, 3);
    for (int step = 0; step < 6; ++step) {
      int i = idx(rng), j = idx(rng);
      if (i != j) {
        int c = coef(rng);
        for (int k = 0; k < n; ++k) mixed[i][k] += c * mixed[j][k];
      } else {
        for (int k = 0; k < n; ++k) mixed[i][k] = -mixed[i][k];
      }
      std::shuffle(mixed.begin(), mixed.end(), rng);
    }
    expect(hnf(n, mixed).basis == s.basis, "HNF not invariant under unimodular remixing");
  }
  // index vs coset count
  int counted = 0;
  while (counted < 20) {
    IntMat rows(2, IntVec(2));
    for (auto& r : rows)
      for (auto& v : r) v = entry(rng);
    LatticeSubgroup s = hnf(2, rows);
    auto idx = finite_index(s);
    if (!idx || *idx > 30) continue;
    ++counted;
    std::set<IntVec> cosets;
    for (int px = 0; px < 2 * static_cast<int>(*idx); ++px)
      for (int py = 0; py < 2 * static_cast<int>(*idx); ++py) {
        IntVec v{px, py};
        for (const IntVec& row : s.basis) {
          int p = 0;
          while (p < 2 && row[p] == 0) ++p;
          if (p < 2) {
            int64_t q = v[p] / row[p];
            if (v[p] % row[p] < 0) --q;
            for (int k = 0; k < 2; ++k) v[k] -= q * row[k];
          }
        }
        cosets.insert(v);
      }
    expect(static_cast<int64_t>(cosets.size()) == *idx, "index disagrees with the coset count");
  }
  // fair duplicate-free tuple enumeration
  FiniteIndexEnumerator e(2);
  std::set<IntMat> seen;
  for (int i = 0; i < 200; ++i) {
    IntMat m = e.next();
    expect(seen.insert(m).second, "tuple enumerator repeated a basis");
    LatticeSubgroup s = hnf(2, m);
    expect(s.basis == m, "enumerated basis is not canonical");
    expect(finite_index(s).has_value(), "enumerated basis is not finite index");
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "100 remix + 20 coset + 200 tuple cases, %zu violations", problems.size());
  report(5, "lattice suite", problems.empty(), timer.elapsed(), 5.0, detail);
}

void criterion6() {
  Timer timer;
  problems.clear();
  std::mt19937 rng(6006);
  std::uniform_int_distribution<int> state_dist(1, 6), density(0, 2), flip(0, 1);
  std::vector<Letter> sigma = signed_alphabet(2);
  auto random_fsa = [&]() {
    Fsa a;
    a.alphabet = sigma;
    int n = state_dist(rng);
    std::uniform_int_distribution<int> target(0, n - 1);
    for (int q = 0; q < n; ++q) a.add_state(flip(rng));
    a.initial = target(rng);
    for (int q = 0; q < n; ++q)
      for (Letter l : sigma)
        if (density(rng) == 0) a.add_trans(q, l, target(rng));
    return a;
  };
  auto random_word = [&](int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<Letter> w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(sigma[pick(rng)]);
    return w;
  };
  for (int trial = 0; trial < 100; ++trial) {
    Fsa a = random_fsa();
    Fsa b = random_fsa();
    Fsa da = determinize(a);
    Fsa ma = minimize(a);
    Fsa ca = complement_fsa(a);
    Fsa i = intersect_fsa(a, b);
    Fsa u = union_fsa(a, b);
    Fsa d = difference_fsa(a, b);
    for (int k = 0; k < 40; ++k) {
      auto w = random_word(8);
      bool in_a = a.accepts(w), in_b = b.accepts(w);
      expect(da.accepts(w) == in_a, "determinize changed the language");
      expect(ma.accepts(w) == in_a, "minimize changed the language");
      expect(ca.accepts(w) != in_a, "complement kept a word");
      expect(i.accepts(w) == (in_a && in_b), "intersection identity failed");
      expect(u.accepts(w) == (in_a || in_b), "union identity failed");
      expect(d.accepts(w) == (in_a && !in_b), "difference identity failed");
    }
    // enumeration: accepted, shortlex-sorted, duplicate-free
    auto words = enumerate_fsa(a, 25);
    std::set<std::vector<Letter>> dedup(words.begin(), words.end());
    expect(dedup.size() == words.size(), "enumeration repeated a word");
    for (size_t k = 0; k + 1 < words.size(); ++k)
      expect(shortlex_less(words[k], words[k + 1]), "enumeration out of shortlex order");
    for (const auto& w : words) expect(a.accepts(w), "enumeration produced a rejected word");
    expect(is_empty_fsa(a) == words.empty(), "emptiness disagrees with enumeration");
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "100 random automata, %zu violations", problems.size());
  report(6, "automata suite", problems.empty(), timer.elapsed(), 10.0, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}

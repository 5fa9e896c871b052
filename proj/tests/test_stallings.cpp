#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "cgt/stallings.hpp"

using namespace cgt;

namespace {

const Alphabet ab({"a", "b"});

// Quadratic reference folder: merge endpoints of equally-labeled edges
// sharing a source or a target until none remain.
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
    // drop duplicate parallel edges
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
  // compact the used vertices into a StallingsGraph
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

Word random_reduced_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 3);
  static const Letter letters[4] = {1, -1, 2, -2};
  Word w;
  int len = len_dist(rng);
  while (static_cast<int>(w.size()) < len) {
    Letter l = letters[letter_dist(rng)];
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
  }
  return w;
}

}  // namespace

TEST_CASE("folding matches the naive reference on random bouquets") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> gens;
    int k = 1 + trial % 4;
    for (int i = 0; i < k; ++i) gens.push_back(random_reduced_word(rng, 8));
    GraphBuilder b = bouquet(ab, gens);
    StallingsGraph fast = fold(b);
    StallingsGraph slow = naive_fold(b);
    CHECK(isomorphic(fast, slow));
  }
}

TEST_CASE("membership in a free subgroup") {
  StallingsGraph g = stallings_graph(ab, {ab.parse("a*a"), ab.parse("b*b"), ab.parse("a*b")});
  // the even-length subgroup of F(a,b)
  CHECK(membership_free(g, ab.parse("a*b*a*b")));
  CHECK(membership_free(g, ab.parse("b^-1*a")));
  CHECK_FALSE(membership_free(g, ab.parse("a*a*b")));
  CHECK_FALSE(membership_free(g, ab.parse("a")));
  CHECK(membership_free(g, Word{}));
}

TEST_CASE("random products of generators are members") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Word> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_reduced_word(rng, 6));
    StallingsGraph g = stallings_graph(ab, gens);
    Word prod;
    std::uniform_int_distribution<int> pick(0, 2), sign(0, 1);
    for (int i = 0; i < 5; ++i) {
      Word h = gens[pick(rng)];
      prod = concat(prod, sign(rng) ? inverse(h) : h);
    }
    CHECK(membership_free(g, free_reduce(prod)));
  }
}

TEST_CASE("rank and basis") {
  StallingsGraph g = stallings_graph(ab, {ab.parse("a*a"), ab.parse("b*b"), ab.parse("a*b")});
  auto [rank, basis] = rank_and_basis(g);
  // index-2 subgroups of F2 have rank 3
  CHECK(rank == 3);
  CHECK(basis.size() == 3);
  for (const Word& w : basis) CHECK(membership_free(g, w));
  // a redundant generating set folds to the right rank
  StallingsGraph h = stallings_graph(ab, {ab.parse("a"), ab.parse("a*b"), ab.parse("b^-1")});
  CHECK(rank_and_basis(h).first == 2);
}

TEST_CASE("index of a subgroup") {
  StallingsGraph g = stallings_graph(ab, {ab.parse("a*a"), ab.parse("b*b"), ab.parse("a*b")});
  auto idx = index_free(g);
  REQUIRE(idx.has_value());
  CHECK(*idx == 2);
  StallingsGraph h = stallings_graph(ab, {ab.parse("a")});
  CHECK_FALSE(index_free(h).has_value());
  StallingsGraph full = stallings_graph(ab, {ab.parse("a"), ab.parse("b")});
  CHECK(index_free(full) == 1);
}

TEST_CASE("intersection via the product graph") {
  StallingsGraph g1 = stallings_graph(ab, {ab.parse("a*a"), ab.parse("b")});
  StallingsGraph g2 = stallings_graph(ab, {ab.parse("a*a*a"), ab.parse("b")});
  StallingsGraph g = intersect_free(g1, g2);
  CHECK(membership_free(g, ab.parse("a*a*a*a*a*a")));
  CHECK(membership_free(g, ab.parse("b")));
  CHECK_FALSE(membership_free(g, ab.parse("a*a")));
  CHECK_FALSE(membership_free(g, ab.parse("a*a*a")));
  // <a^2> meet <a^3> = <a^6>
  StallingsGraph c = intersect_free(stallings_graph(ab, {ab.parse("a*a")}),
                                    stallings_graph(ab, {ab.parse("a*a*a")}));
  CHECK(rank_and_basis(c).first == 1);
  CHECK(membership_free(c, ab.parse("a*a*a*a*a*a")));
  CHECK_FALSE(membership_free(c, ab.parse("a*a*a")));
}

TEST_CASE("conjugacy of subgroups") {
  StallingsGraph g1 = stallings_graph(ab, {ab.parse("b")});
  StallingsGraph g2 = stallings_graph(ab, {ab.parse("a*b*a^-1")});
  auto x = conjugate_free(g1, g2);
  REQUIRE(x.has_value());
  // H1^x = H2 with x = a^-1: a b a^-1 = x^-1 b x
  CHECK(*x == ab.parse("a^-1"));
  CHECK_FALSE(conjugate_free(g1, stallings_graph(ab, {ab.parse("a")})).has_value());
  // conjugation is reflexive; the found conjugator normalizes <b>
  auto self = conjugate_free(g1, g1);
  REQUIRE(self.has_value());
  Word moved = free_reduce(concat(concat(inverse(*self), ab.parse("b")), *self));
  CHECK(membership_free(g1, moved));
}

TEST_CASE("random conjugates are detected") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Word> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_reduced_word(rng, 5));
    Word x = random_reduced_word(rng, 4);
    std::vector<Word> conj;
    for (const Word& h : gens) conj.push_back(free_reduce(concat(concat(inverse(x), h), x)));
    StallingsGraph g1 = stallings_graph(ab, gens);
    StallingsGraph g2 = stallings_graph(ab, conj);
    auto found = conjugate_free(g1, g2);
    REQUIRE(found.has_value());
    // the found conjugator really conjugates: check on each generator
    for (const Word& h : gens) {
      Word moved = free_reduce(concat(concat(inverse(*found), h), *found));
      CHECK(membership_free(g2, moved));
    }
  }
}

TEST_CASE("trim removes hair but keeps the base") {
  GraphBuilder b = bouquet(ab, {ab.parse("a*b*a^-1")});
  StallingsGraph g = trim(fold(b));
  // the loop stays reachable through its conjugating tail
  CHECK(membership_free(g, ab.parse("a*b*a^-1")));
  StallingsGraph core = stallings_graph(ab, {ab.parse("a*b*a^-1")});
  CHECK(core.num_vertices() == g.num_vertices());
}

TEST_CASE("loop automaton accepts exactly the subgroup's reduced words") {
  StallingsGraph g = stallings_graph(ab, {ab.parse("a*a"), ab.parse("b")});
  Fsa l = determinize(loop_fsa(g));
  CHECK(l.accepts(ab.parse("a*a")));
  CHECK(l.accepts(ab.parse("b^-1*a*a*b")));
  CHECK_FALSE(l.accepts(ab.parse("a")));
  CHECK(l.accepts(Word{}));
}

TEST_CASE("dot export mentions every vertex") {
  StallingsGraph g = stallings_graph(ab, {ab.parse("a*b")});
  std::string dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("a") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cgt/autostruct.hpp"
#include "cgt/oracles.hpp"

using namespace cgt;

namespace {

Word random_word(std::mt19937& rng, int num_gens, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, num_gens - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word w;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    int g = gen_dist(rng) + 1;
    w.push_back(sign_dist(rng) ? g : -g);
  }
  return w;
}

}  // namespace

TEST_CASE("free structure: representatives are free reductions") {
  AutomaticStructure s = builtin_shortlex_free(Alphabet({"a", "b"}));
  CHECK(validate(s, 4).ok());
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    Word w = random_word(rng, 2, 7);
    CHECK(representative(s, w) == free_reduce(w));
  }
  CHECK(word_problem(s, {1, -1}));
  CHECK_FALSE(word_problem(s, {1}));
}

TEST_CASE("free structure word acceptor is the reduced language") {
  AutomaticStructure s = builtin_shortlex_free(Alphabet({"a", "b"}));
  CHECK(s.word_acceptor.accepts({1, 2, -1}));
  CHECK_FALSE(s.word_acceptor.accepts({1, -1}));
  CHECK(s.word_acceptor.accepts({}));
}

TEST_CASE("abelian structure: sorted normal forms") {
  AutomaticStructure s = builtin_shortlex_abelian(Alphabet({"a", "b"}));
  CHECK(validate(s, 4).ok());
  // b*a has representative a*b
  CHECK(representative(s, {2, 1}) == Word{1, 2});
  CHECK(representative(s, {2, -1, 2}) == Word{-1, 2, 2});
  CHECK(word_problem(s, {1, 2, -1, -2}));
  CHECK_FALSE(word_problem(s, {1, 2, -1}));
  std::mt19937 rng(32);
  for (int i = 0; i < 60; ++i) {
    Word w = random_word(rng, 2, 7);
    CHECK(representative(s, w) == vector_to_word(abelianize(2, w)));
  }
}

TEST_CASE("abelian acceptor language is sorted powers") {
  AutomaticStructure s = builtin_shortlex_abelian(Alphabet({"a", "b"}));
  CHECK(s.word_acceptor.accepts({1, 1, 2}));
  CHECK(s.word_acceptor.accepts({-1, -1, -2}));
  CHECK_FALSE(s.word_acceptor.accepts({2, 1}));
  CHECK_FALSE(s.word_acceptor.accepts({1, -1}));
}

TEST_CASE("free product structure Z^2 * Z") {
  AutomaticStructure zz = builtin_shortlex_abelian(Alphabet({"a", "b"}));
  AutomaticStructure z = builtin_shortlex_free(Alphabet({"t"}));
  AutomaticStructure s = builtin_free_product(zz, z);
  REQUIRE(s.alphabet.size() == 3);
  CHECK(validate(s, 4).ok());
  // t a t^-1 a^-1 is not trivial in the free product
  CHECK_FALSE(word_problem(s, {3, 1, -3, -1}));
  CHECK(word_problem(s, {1, 2, -1, -2}));
  CHECK(word_problem(s, {3, 1, -1, -3}));
  // representative of t b a t: syllables stay alternating, Z^2 part sorted
  CHECK(representative(s, {3, 2, 1, 3}) == Word{3, 1, 2, 3});
  // a t a^-1 has no shorter form
  CHECK(representative(s, {1, 3, -1}) == Word{1, 3, -1});
}

TEST_CASE("free product representatives agree with the syllable oracle") {
  AutomaticStructure zz = builtin_shortlex_abelian(Alphabet({"a", "b"}));
  AutomaticStructure z = builtin_shortlex_free(Alphabet({"t"}));
  AutomaticStructure s = builtin_free_product(zz, z);
  std::mt19937 rng(33);
  for (int i = 0; i < 40; ++i) {
    Word w = random_word(rng, 3, 6);
    Word rep = representative(s, w);
    CHECK(s.word_acceptor.accepts(rep));
    CHECK(rep == s.oracle->normal_form(w));
  }
}

TEST_CASE("multiplier_for_word composes letter multipliers") {
  AutomaticStructure s = builtin_shortlex_free(Alphabet({"a", "b"}));
  PairFsa m = multiplier_for_word(s, {1, 2});  // right multiply by a*b
  CHECK(accepts_pair(m, {}, {1, 2}));
  CHECK(accepts_pair(m, {-2}, {-2, 1, 2}));
  CHECK(accepts_pair(m, {-2, -1}, {}));
  CHECK_FALSE(accepts_pair(m, {}, {1}));
}

TEST_CASE("custom abelian oracle with a letter mapping to a^2") {
  // Z with generators a and c where c = a^2: letters map to 1 and 2
  Alphabet ac({"a", "c"});
  auto oracle = std::make_shared<AbelianOracle>();
  oracle->rank = 1;
  oracle->letter_vec = {{1}, {2}};
  // c*a^-2 is trivial under this oracle
  CHECK(oracle->normal_form({2, -1, -1}).empty());
  CHECK(oracle->normal_form({2}) == Word{1, 1});
}

TEST_CASE("validation flags a corrupted multiplier") {
  AutomaticStructure s = builtin_shortlex_free(Alphabet({"a"}));
  REQUIRE(validate(s, 4).ok());
  std::swap(s.mult_pos[0], s.mult_neg[0]);
  CHECK_FALSE(validate(s, 4).ok());
}

TEST_CASE("free membership cross-check through representatives") {
  // sanity: the oracle used by later suites agrees with free reduction
  std::mt19937 rng(34);
  std::vector<Word> gens = {{1, 1}, {2}};
  for (int i = 0; i < 20; ++i) {
    Word w = random_word(rng, 2, 5);
    bool brute = free_membership_bruteforce(gens, w, 6);
    if (brute) {
      // every positive is a genuine product
      CHECK(free_membership_bruteforce(gens, free_reduce(w), 6));
    }
  }
  CHECK(free_membership_bruteforce(gens, {1, 1, 2}, 4));
  CHECK_FALSE(free_membership_bruteforce(gens, {1}, 6));
}

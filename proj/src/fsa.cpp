#include "cgt/fsa.hpp"

namespace cgt {

std::vector<Letter> signed_alphabet(int num_gens) {
  std::vector<Letter> sigma;
  for (int g = 0; g < num_gens; ++g) {
    sigma.push_back(g + 1);
    sigma.push_back(-(g + 1));
  }
  return sigma;
}

Fsa reduced_words_fsa(int num_gens) {
  Fsa a;
  a.alphabet = signed_alphabet(num_gens);
  a.deterministic = true;
  // state 0: empty history; state 1+i: last letter was alphabet[i]
  a.add_state(true);
  for (size_t i = 0; i < a.alphabet.size(); ++i) a.add_state(true);
  for (size_t i = 0; i < a.alphabet.size(); ++i) {
    Letter l = a.alphabet[i];
    a.add_trans(0, l, static_cast<int>(i) + 1);
    for (size_t j = 0; j < a.alphabet.size(); ++j)
      if (a.alphabet[j] != -l) a.add_trans(static_cast<int>(j) + 1, l, static_cast<int>(i) + 1);
  }
  return a;
}

Fsa complement_reduced(const Fsa& a, int num_gens) {
  return intersect_fsa(complement_fsa(a), reduced_words_fsa(num_gens));
}

Fsa single_word_fsa(const Word& w, int num_gens) {
  Fsa a;
  a.alphabet = signed_alphabet(num_gens);
  a.deterministic = true;
  int prev = a.add_state(w.empty());
  for (size_t i = 0; i < w.size(); ++i) {
    int next = a.add_state(i + 1 == w.size());
    a.add_trans(prev, w[i], next);
    prev = next;
  }
  return a;
}

Fsa word_set_fsa(const std::vector<Word>& words, int num_gens) {
  Fsa a;
  a.alphabet = signed_alphabet(num_gens);
  int init = a.add_state(false);
  a.initial = init;
  for (const Word& w : words) {
    if (w.empty()) {
      a.accepting[init] = 1;
      continue;
    }
    int prev = init;
    for (size_t i = 0; i < w.size(); ++i) {
      int next = a.add_state(i + 1 == w.size());
      a.add_trans(prev, w[i], next);
      prev = next;
    }
  }
  return minimize(a);
}

}  // namespace cgt

#ifndef CGT_WORDS_HPP
#define CGT_WORDS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgt {

// A letter is a nonzero int: +(g+1) is generator g, -(g+1) its inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline int gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline Letter inv(Letter l) { return -l; }

inline Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// ShortLex letter order: g0 < g0^-1 < g1 < g1^-1 < ...
inline int letter_rank(Letter l) { return 2 * gen_of(l) + (l < 0 ? 1 : 0); }

// ShortLex word comparison: length first, then lex on letter ranks.
bool shortlex_less(const Word& a, const Word& b);

struct MalformedInput : std::runtime_error {
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int gen) const { return names_.at(gen); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if absent
  bool contains_word(const Word& w) const;

  // Word syntax: generators joined by '*', inverse marked by '^-1'.
  // For single-letter generator names an uppercase letter means inverse.
  Word parse(const std::string& text) const;
  std::string format(const Word& w) const;
  std::string format_letter(Letter l) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Disjoint union; throws on a name collision.
Alphabet merge_alphabets(const Alphabet& a, const Alphabet& b);

Word free_reduce(const Word& w);
bool is_reduced(const Word& w);

// Returns (core, prefix) with w = prefix * core * prefix^-1, core cyclically
// reduced and the prefix maximal. Expects w freely reduced.
std::pair<Word, Word> cyclic_reduce(const Word& w);

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;  // cyclically reduced, nonempty
};

// Closure of the relator set under cyclic permutation and inversion,
// deduplicated.
Presentation relator_closure(const Presentation& p);

}  // namespace cgt

#endif

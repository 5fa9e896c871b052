#include "cgt/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cgt {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : names_(std::move(symbols)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty()) throw MalformedInput("empty generator name");
    if (!index_.emplace(names_[i], i).second)
      throw MalformedInput("duplicate generator name: " + names_[i]);
  }
}

int Alphabet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool Alphabet::contains_word(const Word& w) const {
  for (Letter l : w)
    if (l == 0 || gen_of(l) >= size()) return false;
  return true;
}

Word Alphabet::parse(const std::string& text) const {
  Word w;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;
    // trim spaces
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(tok.begin());
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    if (tok.empty()) continue;
    bool invert = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      invert = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    int g = index_of(tok);
    if (g < 0 && !invert && tok.size() == 1 && std::isupper(static_cast<unsigned char>(tok[0]))) {
      // uppercase shorthand for the inverse of a single-letter generator
      std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0]))));
      g = index_of(lower);
      invert = true;
    }
    if (g < 0) throw MalformedInput("unknown generator: " + tok);
    w.push_back(invert ? -(g + 1) : (g + 1));
  }
  return w;
}

std::string Alphabet::format_letter(Letter l) const {
  std::string s = name(gen_of(l));
  if (l < 0) s += "^-1";
  return s;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += format_letter(w[i]);
  }
  return s;
}

Alphabet merge_alphabets(const Alphabet& a, const Alphabet& b) {
  std::vector<std::string> names = a.names();
  for (const auto& n : b.names()) {
    if (a.index_of(n) >= 0) throw MalformedInput("alphabet collision on: " + n);
    names.push_back(n);
  }
  return Alphabet(names);
}

Word free_reduce(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (l == 0) throw MalformedInput("zero letter");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  return true;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  size_t i = 0, j = w.size();
  while (j > i + 1 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  Word core(w.begin() + i, w.begin() + j);
  Word prefix(w.begin(), w.begin() + i);
  return {core, prefix};
}

Presentation relator_closure(const Presentation& p) {
  std::set<Word> seen;
  for (const Word& r : p.relators) {
    Word core = cyclic_reduce(free_reduce(r)).first;
    if (core.empty()) continue;
    for (int s = 0; s < 2; ++s) {
      Word base = s ? inverse(core) : core;
      for (size_t k = 0; k < base.size(); ++k) {
        Word rot(base.begin() + k, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + k);
        seen.insert(rot);
      }
    }
  }
  Presentation out;
  out.alphabet = p.alphabet;
  out.relators.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace cgt

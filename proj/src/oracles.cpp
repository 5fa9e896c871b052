#include "cgt/oracles.hpp"

#include <algorithm>

namespace cgt {

bool free_membership_bruteforce(const std::vector<Word>& generators, const Word& w, int depth) {
  Word target = free_reduce(w);
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  if (target.empty()) return true;
  std::vector<Word> steps;
  for (const Word& h : generators) {
    steps.push_back(free_reduce(h));
    steps.push_back(inverse(free_reduce(h)));
  }
  for (int d = 0; d < depth; ++d) {
    std::vector<Word> next;
    for (const Word& u : frontier)
      for (const Word& s : steps) {
        Word v = free_reduce(concat(u, s));
        if (v == target) return true;
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return false;
}

bool abelian_membership(int rank, const std::vector<Word>& generators, const Word& w) {
  IntMat rows;
  for (const Word& h : generators) rows.push_back(abelianize(rank, h));
  return lattice_membership(hnf(rank, rows), abelianize(rank, w));
}

namespace {

struct Syllable {
  bool is_t = false;
  IntVec ab{0, 0};  // exponents of a, b when !is_t
  int64_t t = 0;    // exponent of t when is_t
  bool trivial() const { return is_t ? t == 0 : (ab[0] == 0 && ab[1] == 0); }
};

// Normal form of w in Z^2 * <t> as alternating nontrivial syllables.
std::vector<Syllable> toral_syllables(const Word& w) {
  std::vector<Syllable> out;
  for (Letter l : w) {
    int g = gen_of(l);
    int64_t e = l > 0 ? 1 : -1;
    Syllable s;
    if (g == 2) {
      s.is_t = true;
      s.t = e;
    } else {
      s.ab[g] = e;
    }
    if (!out.empty() && out.back().is_t == s.is_t) {
      if (s.is_t)
        out.back().t += s.t;
      else {
        out.back().ab[0] += s.ab[0];
        out.back().ab[1] += s.ab[1];
      }
      if (out.back().trivial()) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  // merging can expose new same-factor neighbors; iterate to a fixed point
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Syllable> merged;
    for (const Syllable& s : out) {
      if (!merged.empty() && merged.back().is_t == s.is_t) {
        if (s.is_t)
          merged.back().t += s.t;
        else {
          merged.back().ab[0] += s.ab[0];
          merged.back().ab[1] += s.ab[1];
        }
        if (merged.back().trivial()) merged.pop_back();
        changed = true;
      } else {
        merged.push_back(s);
      }
    }
    out = std::move(merged);
  }
  return out;
}

}  // namespace

bool toral_membership(const LatticeSubgroup& r, int t_divisor, const Word& w) {
  for (const Syllable& s : toral_syllables(w)) {
    if (s.is_t) {
      if (t_divisor == 0 || s.t % t_divisor != 0) return false;
    } else {
      if (!lattice_membership(r, s.ab)) return false;
    }
  }
  return true;
}

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_of_word(const std::vector<Perm>& generator_images, const Word& w) {
  if (generator_images.empty()) throw MalformedInput("no generator images");
  Perm acc = perm_identity(static_cast<int>(generator_images[0].size()));
  for (Letter l : w) {
    const Perm& g = generator_images.at(gen_of(l));
    acc = perm_compose(acc, l > 0 ? g : perm_inverse(g));
  }
  return acc;
}

std::set<Perm> perm_closure(const std::vector<Perm>& generators) {
  if (generators.empty()) return {};
  std::set<Perm> elems{perm_identity(static_cast<int>(generators[0].size()))};
  std::vector<Perm> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : generators) {
        Perm q = perm_compose(p, g);
        if (elems.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return elems;
}

bool perm_membership(const std::vector<Perm>& generator_images,
                     const std::vector<Word>& subgroup_words, const Word& w) {
  std::vector<Perm> sub;
  for (const Word& h : subgroup_words) sub.push_back(perm_of_word(generator_images, h));
  if (sub.empty()) {
    int n = generator_images.empty() ? 0 : static_cast<int>(generator_images[0].size());
    return perm_of_word(generator_images, w) == perm_identity(n);
  }
  return perm_closure(sub).count(perm_of_word(generator_images, w)) > 0;
}

}  // namespace cgt

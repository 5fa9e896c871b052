#include "cgt/lattice.hpp"

#include <algorithm>
#include <functional>
#include <cstdlib>

namespace cgt {

LatticeSubgroup hnf(int ambient_rank, const IntMat& vectors) {
  for (const IntVec& v : vectors)
    if (static_cast<int>(v.size()) != ambient_rank)
      throw MalformedInput("vector length mismatch");
  IntMat m = vectors;
  int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < ambient_rank && r < rows; ++c) {
    // gcd elimination in column c, rows r..
    for (;;) {
      int pivot = -1;
      for (int i = r; i < rows; ++i)
        if (m[i][c] != 0 && (pivot < 0 || std::llabs(m[i][c]) < std::llabs(m[pivot][c])))
          pivot = i;
      if (pivot < 0) break;
      std::swap(m[r], m[pivot]);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        int64_t q = m[i][c] / m[r][c];
        for (int j = 0; j < ambient_rank; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (int j = 0; j < ambient_rank; ++j) m[r][j] = -m[r][j];
    // reduce the entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      int64_t q = m[i][c] / m[r][c];
      if (m[i][c] % m[r][c] < 0) --q;
      if (q != 0)
        for (int j = 0; j < ambient_rank; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  LatticeSubgroup s;
  s.ambient_rank = ambient_rank;
  s.basis.assign(m.begin(), m.begin() + r);
  return s;
}

bool lattice_membership(const LatticeSubgroup& s, const IntVec& v0) {
  if (static_cast<int>(v0.size()) != s.ambient_rank) throw MalformedInput("dimension mismatch");
  IntVec v = v0;
  for (const IntVec& row : s.basis) {
    int c = 0;
    while (c < s.ambient_rank && row[c] == 0) ++c;
    if (c == s.ambient_rank) continue;
    if (v[c] % row[c] != 0) return false;
    int64_t q = v[c] / row[c];
    for (int j = 0; j < s.ambient_rank; ++j) v[j] -= q * row[j];
  }
  for (int64_t x : v)
    if (x != 0) return false;
  return true;
}

std::optional<int64_t> finite_index(const LatticeSubgroup& s) {
  if (static_cast<int>(s.basis.size()) != s.ambient_rank) return std::nullopt;
  int64_t det = 1;
  for (int i = 0; i < s.ambient_rank; ++i) {
    int c = 0;
    while (c < s.ambient_rank && s.basis[i][c] == 0) ++c;
    if (c == s.ambient_rank) return std::nullopt;
    det *= s.basis[i][c];
  }
  return det < 0 ? -det : det;
}

FiniteIndexEnumerator::FiniteIndexEnumerator(int rank) : rank_(rank), layer_(0) {}

namespace {

// All full-rank HNF matrices with entries <= layer and max entry == layer,
// in row-major lexicographic order.
void gen_layer(int n, int layer, std::vector<IntMat>& out) {
  IntMat m(n, IntVec(n, 0));
  // Diagonal first (it bounds the above-pivot entries), then the rest;
  // row-major lex order restored by the final sort.
  std::function<void(int)> diag = [&](int i) {
    if (i == n) {
      // enumerate above-pivot entries column-by-column
      std::vector<std::pair<int, int>> cells;
      for (int c = 1; c < n; ++c)
        for (int r = 0; r < c; ++r) cells.emplace_back(r, c);
      std::function<void(size_t)> fill = [&](size_t k) {
        if (k == cells.size()) {
          int64_t mx = 0;
          for (const auto& row : m)
            for (int64_t x : row) mx = std::max(mx, x);
          if (mx == layer) out.push_back(m);
          return;
        }
        auto [r, c] = cells[k];
        int64_t bound = std::min<int64_t>(m[c][c], layer + 1);
        for (int64_t x = 0; x < bound; ++x) {
          m[r][c] = x;
          fill(k + 1);
        }
        m[r][c] = 0;
      };
      fill(0);
      return;
    }
    for (int64_t d = 1; d <= layer; ++d) {
      m[i][i] = d;
      diag(i + 1);
    }
  };
  diag(0);
  std::sort(out.begin(), out.end());
}

}  // namespace

IntMat FiniteIndexEnumerator::next() {
  if (buffer_pos_ >= buffer_.size()) {
    buffer_.clear();
    buffer_pos_ = 0;
    while (buffer_.empty()) {
      ++layer_;
      gen_layer(rank_, layer_, buffer_);
    }
  }
  return buffer_[buffer_pos_++];
}

IntVec abelianize(int rank, const Word& w) {
  IntVec v(rank, 0);
  for (Letter l : w) {
    if (gen_of(l) >= rank) throw MalformedInput("letter outside peripheral alphabet");
    v[gen_of(l)] += l > 0 ? 1 : -1;
  }
  return v;
}

Word vector_to_word(const IntVec& v) {
  Word w;
  for (int g = 0; g < static_cast<int>(v.size()); ++g) {
    Letter l = v[g] >= 0 ? (g + 1) : -(g + 1);
    for (int64_t i = 0; i < std::llabs(v[g]); ++i) w.push_back(l);
  }
  return w;
}

Word embed_peripheral_word(const Peripheral& p, const Word& w) {
  Word out;
  for (Letter l : w) {
    if (gen_of(l) >= p.rank) throw MalformedInput("letter outside peripheral alphabet");
    const Word& img = p.embedding[gen_of(l)];
    Word piece = l > 0 ? img : inverse(img);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

}  // namespace cgt

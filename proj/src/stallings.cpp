#include "cgt/stallings.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace cgt {

int StallingsGraph::num_edges() const {
  int n = 0;
  for (const auto& row : out)
    for (int t : row)
      if (t >= 0) ++n;
  return n;
}

int StallingsGraph::add_vertex() {
  out.emplace_back(alphabet.size(), -1);
  in.emplace_back(alphabet.size(), -1);
  return num_vertices() - 1;
}

void GraphBuilder::add_loop(int v, const Word& w) {
  int end = add_path(v, Word(w.begin(), w.end() - (w.empty() ? 0 : 1)));
  if (w.empty()) return;
  Letter last = w.back();
  if (last > 0)
    edges.push_back({end, gen_of(last), v});
  else
    edges.push_back({v, gen_of(last), end});
}

int GraphBuilder::add_path(int v, const Word& w) {
  int cur = v;
  for (Letter l : w) {
    int next = add_vertex();
    if (l > 0)
      edges.push_back({cur, gen_of(l), next});
    else
      edges.push_back({next, gen_of(l), cur});
    cur = next;
  }
  return cur;
}

GraphBuilder to_builder(const StallingsGraph& g) {
  GraphBuilder b;
  b.alphabet = g.alphabet;
  b.num_vertices = g.num_vertices();
  b.base = g.base;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int gen = 0; gen < g.alphabet.size(); ++gen)
      if (g.out[v][gen] >= 0) b.edges.push_back({v, gen, g.out[v][gen]});
  return b;
}

GraphBuilder bouquet(const Alphabet& alphabet, const std::vector<Word>& generators) {
  GraphBuilder b;
  b.alphabet = alphabet;
  b.base = b.add_vertex();
  for (const Word& w : generators) {
    if (!alphabet.contains_word(w)) throw MalformedInput("generator outside alphabet");
    b.add_loop(b.base, w);
  }
  return b;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

}  // namespace

StallingsGraph fold(const GraphBuilder& b) {
  int k = b.alphabet.size();
  UnionFind uf(b.num_vertices);
  // per-root adjacency: out_map[r][g] and in_map[r][g] hold a representative
  // neighbor (possibly stale; resolve through the union-find)
  std::vector<std::map<int, int>> out_map(b.num_vertices), in_map(b.num_vertices);
  std::deque<std::pair<int, int>> pending;

  auto insert_edge = [&](int src, int gen, int dst) {
    int rs = uf.find(src);
    auto [it, fresh] = out_map[rs].emplace(gen, dst);
    if (!fresh && uf.find(it->second) != uf.find(dst)) pending.emplace_back(it->second, dst);
    int rd = uf.find(dst);
    auto [it2, fresh2] = in_map[rd].emplace(gen, src);
    if (!fresh2 && uf.find(it2->second) != uf.find(src)) pending.emplace_back(it2->second, src);
  };
  for (const auto& e : b.edges) insert_edge(e.src, e.gen, e.dst);

  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    int rx = uf.find(x), ry = uf.find(y);
    if (rx == ry) continue;
    if (out_map[rx].size() + in_map[rx].size() < out_map[ry].size() + in_map[ry].size())
      std::swap(rx, ry);
    uf.parent[ry] = rx;
    for (auto& [gen, t] : out_map[ry]) {
      auto [it, fresh] = out_map[rx].emplace(gen, t);
      if (!fresh && uf.find(it->second) != uf.find(t)) pending.emplace_back(it->second, t);
    }
    for (auto& [gen, s] : in_map[ry]) {
      auto [it, fresh] = in_map[rx].emplace(gen, s);
      if (!fresh && uf.find(it->second) != uf.find(s)) pending.emplace_back(it->second, s);
    }
    out_map[ry].clear();
    in_map[ry].clear();
  }

  StallingsGraph g;
  g.alphabet = b.alphabet;
  std::vector<int> id(b.num_vertices, -1);
  for (int v = 0; v < b.num_vertices; ++v)
    if (uf.find(v) == v) id[v] = g.add_vertex();
  g.base = id[uf.find(b.base)];
  for (int v = 0; v < b.num_vertices; ++v) {
    if (uf.find(v) != v) continue;
    for (auto& [gen, t] : out_map[v]) {
      int tv = id[uf.find(t)];
      g.out[id[v]][gen] = tv;
      g.in[tv][gen] = id[v];
    }
  }
  (void)k;
  return g;
}

namespace {

int degree(const StallingsGraph& g, int v) {
  int d = 0;
  for (int t : g.out[v])
    if (t >= 0) ++d;
  for (int s : g.in[v])
    if (s >= 0) ++d;
  return d;
}

StallingsGraph compact(const StallingsGraph& g, const std::vector<char>& keep) {
  StallingsGraph h;
  h.alphabet = g.alphabet;
  std::vector<int> id(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (keep[v]) id[v] = h.add_vertex();
  h.base = id[g.base];
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!keep[v]) continue;
    for (int gen = 0; gen < g.alphabet.size(); ++gen) {
      int t = g.out[v][gen];
      if (t >= 0 && keep[t]) {
        h.out[id[v]][gen] = id[t];
        h.in[id[t]][gen] = id[v];
      }
    }
  }
  return h;
}

}  // namespace

StallingsGraph trim(const StallingsGraph& g0) {
  StallingsGraph g = g0;
  std::vector<char> keep(g.num_vertices(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (!keep[v] || v == g.base) continue;
      int d = 0;
      for (int gen = 0; gen < g.alphabet.size(); ++gen) {
        int t = g.out[v][gen];
        if (t >= 0 && keep[t]) ++d;
        int s = g.in[v][gen];
        if (s >= 0 && keep[s]) ++d;
      }
      if (d <= 1) {
        keep[v] = 0;
        changed = true;
      }
    }
  }
  // drop dangling half-edges toward removed vertices, then compact
  StallingsGraph h = g;
  for (int v = 0; v < h.num_vertices(); ++v)
    for (int gen = 0; gen < h.alphabet.size(); ++gen) {
      if (h.out[v][gen] >= 0 && !keep[h.out[v][gen]]) h.out[v][gen] = -1;
      if (h.in[v][gen] >= 0 && !keep[h.in[v][gen]]) h.in[v][gen] = -1;
    }
  return compact(h, keep);
}

StallingsGraph stallings_graph(const Alphabet& alphabet, const std::vector<Word>& generators) {
  std::vector<Word> reduced;
  for (const Word& w : generators) {
    Word r = free_reduce(w);
    if (!r.empty()) reduced.push_back(r);
  }
  return trim(fold(bouquet(alphabet, reduced)));
}

int walk(const StallingsGraph& g, int v, const Word& w) {
  for (Letter l : w) {
    if (gen_of(l) >= g.alphabet.size()) throw MalformedInput("letter outside graph alphabet");
    v = l > 0 ? g.out[v][gen_of(l)] : g.in[v][gen_of(l)];
    if (v < 0) return -1;
  }
  return v;
}

bool membership_free(const StallingsGraph& g, const Word& w) {
  return walk(g, g.base, free_reduce(w)) == g.base;
}

std::pair<int, std::vector<Word>> rank_and_basis(const StallingsGraph& g) {
  int n = g.num_vertices();
  std::vector<Word> path(n);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<char>> tree_out(n, std::vector<char>(g.alphabet.size(), 0));
  std::deque<int> queue{g.base};
  seen[g.base] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int gen = 0; gen < g.alphabet.size(); ++gen) {
      int t = g.out[v][gen];
      if (t >= 0 && !seen[t]) {
        seen[t] = 1;
        path[t] = path[v];
        path[t].push_back(gen + 1);
        tree_out[v][gen] = 1;
        queue.push_back(t);
      }
      int s = g.in[v][gen];
      if (s >= 0 && !seen[s]) {
        seen[s] = 1;
        path[s] = path[v];
        path[s].push_back(-(gen + 1));
        tree_out[s][gen] = 1;  // the edge s -gen-> v is in the tree
        queue.push_back(s);
      }
    }
  }
  std::vector<Word> basis;
  for (int v = 0; v < n; ++v)
    for (int gen = 0; gen < g.alphabet.size(); ++gen) {
      int t = g.out[v][gen];
      if (t < 0 || tree_out[v][gen]) continue;
      Word w = path[v];
      w.push_back(gen + 1);
      Word back = inverse(path[t]);
      w.insert(w.end(), back.begin(), back.end());
      basis.push_back(free_reduce(w));
    }
  int rank = g.num_edges() - n + 1;
  return {rank, basis};
}

std::optional<int> index_free(const StallingsGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int gen = 0; gen < g.alphabet.size(); ++gen)
      if (g.out[v][gen] < 0 || g.in[v][gen] < 0) return std::nullopt;
  return g.num_vertices();
}

StallingsGraph intersect_free(const StallingsGraph& g1, const StallingsGraph& g2) {
  if (g1.alphabet != g2.alphabet) throw MalformedInput("alphabet mismatch");
  StallingsGraph p;
  p.alphabet = g1.alphabet;
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> queue;
  auto intern = [&](int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = p.add_vertex();
    ids.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  p.base = intern(g1.base, g2.base);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    int v = ids.at({a, b});
    for (int gen = 0; gen < p.alphabet.size(); ++gen) {
      int t1 = g1.out[a][gen], t2 = g2.out[b][gen];
      if (t1 >= 0 && t2 >= 0) {
        int t = intern(t1, t2);
        p.out[v][gen] = t;
        p.in[t][gen] = v;
      }
      int s1 = g1.in[a][gen], s2 = g2.in[b][gen];
      if (s1 >= 0 && s2 >= 0) {
        int s = intern(s1, s2);
        p.in[v][gen] = s;
        p.out[s][gen] = v;
      }
    }
  }
  return trim(p);
}

namespace {

// Rooted isomorphism attempt with prescribed base images.
bool rooted_iso(const StallingsGraph& g1, int b1, const StallingsGraph& g2, int b2) {
  if (g1.alphabet != g2.alphabet) return false;
  if (g1.num_vertices() != g2.num_vertices()) return false;
  std::vector<int> map1(g1.num_vertices(), -1);
  map1[b1] = b2;
  std::deque<int> queue{b1};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int w = map1[v];
    for (int gen = 0; gen < g1.alphabet.size(); ++gen) {
      int t1 = g1.out[v][gen], t2 = g2.out[w][gen];
      if ((t1 < 0) != (t2 < 0)) return false;
      if (t1 >= 0) {
        if (map1[t1] < 0) {
          map1[t1] = t2;
          queue.push_back(t1);
        } else if (map1[t1] != t2)
          return false;
      }
      int s1 = g1.in[v][gen], s2 = g2.in[w][gen];
      if ((s1 < 0) != (s2 < 0)) return false;
      if (s1 >= 0) {
        if (map1[s1] < 0) {
          map1[s1] = s2;
          queue.push_back(s1);
        } else if (map1[s1] != s2)
          return false;
      }
    }
  }
  for (int v = 0; v < g1.num_vertices(); ++v)
    if (map1[v] < 0) return false;  // disconnected pieces never arise when folded+trim
  return true;
}

// Peel hair and the base path: returns (core graph, word from old base to
// the new base).
std::pair<StallingsGraph, Word> cyclic_core(const StallingsGraph& g0) {
  StallingsGraph g = g0;
  Word u;
  for (;;) {
    g = trim(g);
    if (g.num_edges() == 0) return {g, u};
    if (degree(g, g.base) >= 2) return {g, u};
    // base has exactly one incident half-edge; step across it
    for (int gen = 0; gen < g.alphabet.size(); ++gen) {
      if (g.out[g.base][gen] >= 0) {
        u.push_back(gen + 1);
        int nb = g.out[g.base][gen];
        std::vector<char> keep(g.num_vertices(), 1);
        keep[g.base] = 0;
        g.out[g.base][gen] = -1;
        g.in[nb][gen] = -1;
        g.base = nb;
        g = compact(g, keep);
        break;
      }
      if (g.in[g.base][gen] >= 0) {
        u.push_back(-(gen + 1));
        int nb = g.in[g.base][gen];
        std::vector<char> keep(g.num_vertices(), 1);
        keep[g.base] = 0;
        g.in[g.base][gen] = -1;
        g.out[nb][gen] = -1;
        g.base = nb;
        g = compact(g, keep);
        break;
      }
    }
  }
}

Word path_word(const StallingsGraph& g, int from, int to) {
  std::vector<int> prev(g.num_vertices(), -2);
  std::vector<Letter> via(g.num_vertices(), 0);
  prev[from] = -1;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int gen = 0; gen < g.alphabet.size(); ++gen) {
      int t = g.out[v][gen];
      if (t >= 0 && prev[t] == -2) {
        prev[t] = v;
        via[t] = gen + 1;
        queue.push_back(t);
      }
      int s = g.in[v][gen];
      if (s >= 0 && prev[s] == -2) {
        prev[s] = v;
        via[s] = -(gen + 1);
        queue.push_back(s);
      }
    }
  }
  Word w;
  for (int v = to; prev[v] >= 0; v = prev[v]) w.push_back(via[v]);
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

bool isomorphic(const StallingsGraph& g1, const StallingsGraph& g2) {
  return rooted_iso(g1, g1.base, g2, g2.base);
}

std::optional<Word> conjugate_free(const StallingsGraph& g1, const StallingsGraph& g2) {
  if (g1.alphabet != g2.alphabet) throw MalformedInput("alphabet mismatch");
  auto [core1, u1] = cyclic_core(g1);
  auto [core2, u2] = cyclic_core(g2);
  if (core1.num_edges() == 0 && core2.num_edges() == 0)
    return free_reduce(concat(u1, inverse(u2)));
  // base candidates in breadth-first order from core1's attach point
  std::vector<int> order;
  {
    std::vector<char> seen(core1.num_vertices(), 0);
    std::deque<int> queue{core1.base};
    seen[core1.base] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int gen = 0; gen < core1.alphabet.size(); ++gen) {
        for (int t : {core1.out[v][gen], core1.in[v][gen]})
          if (t >= 0 && !seen[t]) {
            seen[t] = 1;
            queue.push_back(t);
          }
      }
    }
  }
  for (int v : order) {
    if (!rooted_iso(core1, v, core2, core2.base)) continue;
    Word w = path_word(core1, core1.base, v);
    return free_reduce(concat(concat(u1, w), inverse(u2)));
  }
  return std::nullopt;
}

Fsa loop_fsa(const StallingsGraph& g) {
  Fsa a;
  a.alphabet = signed_alphabet(g.alphabet.size());
  a.deterministic = true;
  for (int v = 0; v < g.num_vertices(); ++v) a.add_state(false);
  a.initial = g.base;
  a.accepting[g.base] = 1;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int gen = 0; gen < g.alphabet.size(); ++gen)
      if (g.out[v][gen] >= 0) {
        a.add_trans(v, gen + 1, g.out[v][gen]);
        a.add_trans(g.out[v][gen], -(gen + 1), v);
      }
  return a;
}

std::string to_dot(const StallingsGraph& g) {
  std::ostringstream os;
  os << "digraph stallings {\n  rankdir=LR;\n";
  os << "  " << g.base << " [shape=doublecircle];\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != g.base) os << "  " << v << " [shape=circle];\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int gen = 0; gen < g.alphabet.size(); ++gen)
      if (g.out[v][gen] >= 0)
        os << "  " << v << " -> " << g.out[v][gen] << " [label=\"" << g.alphabet.name(gen)
           << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cgt

#ifndef CGT_STALLINGS_HPP
#define CGT_STALLINGS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cgt/fsa.hpp"
#include "cgt/words.hpp"

namespace cgt {

// Rooted graph with edges labeled by positive generators; inverse letters
// traverse edges backwards. Folded graphs are deterministic and
// co-deterministic, so out/in maps have at most one entry per generator.
struct StallingsGraph {
  Alphabet alphabet;
  int base = 0;
  std::vector<std::vector<int>> out;  // out[v][g] = target, -1 if none
  std::vector<std::vector<int>> in;   // in[v][g] = source, -1 if none

  int num_vertices() const { return static_cast<int>(out.size()); }
  int num_edges() const;
  int add_vertex();
};

// Unfolded multigraph under construction.
struct GraphBuilder {
  Alphabet alphabet;
  int num_vertices = 0;
  int base = 0;
  struct Edge {
    int src, gen, dst;
  };
  std::vector<Edge> edges;

  int add_vertex() { return num_vertices++; }
  // attach w as a loop at v, creating intermediate vertices
  void add_loop(int v, const Word& w);
  // attach w as a path from v, returning the endpoint
  int add_path(int v, const Word& w);
};

GraphBuilder to_builder(const StallingsGraph& g);

GraphBuilder bouquet(const Alphabet& alphabet, const std::vector<Word>& generators);

// Union-find folding; near-linear in the number of edges.
StallingsGraph fold(const GraphBuilder& b);

// Remove non-base vertices of degree <= 1, repeatedly.
StallingsGraph trim(const StallingsGraph& g);

StallingsGraph stallings_graph(const Alphabet& alphabet, const std::vector<Word>& generators);

// Walk w from v, using inverse edges for negative letters; -1 when stuck.
int walk(const StallingsGraph& g, int v, const Word& w);

bool membership_free(const StallingsGraph& g, const Word& w);

std::pair<int, std::vector<Word>> rank_and_basis(const StallingsGraph& g);

// Finite index (vertex count) when the graph is complete, otherwise empty.
std::optional<int> index_free(const StallingsGraph& g);

StallingsGraph intersect_free(const StallingsGraph& g1, const StallingsGraph& g2);

// Conjugator x with H1^x = H2, if the subgroups are conjugate.
std::optional<Word> conjugate_free(const StallingsGraph& g1, const StallingsGraph& g2);

// Rooted isomorphism of folded graphs (canonical breadth-first numbering).
bool isomorphic(const StallingsGraph& g1, const StallingsGraph& g2);

// The graph viewed as an automaton over the signed alphabet, with the base
// vertex initial and accepting.
Fsa loop_fsa(const StallingsGraph& g);

std::string to_dot(const StallingsGraph& g);

}  // namespace cgt

#endif

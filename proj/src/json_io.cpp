#include "cgt/json_io.hpp"

namespace cgt {

namespace {

json alphabet_to_json(const Alphabet& a) { return json(a.names()); }

Alphabet alphabet_from_json(const json& j) {
  return Alphabet(j.get<std::vector<std::string>>());
}

Letter parse_letter(const json& j, const Alphabet& alphabet) {
  Word w = alphabet.parse(j.get<std::string>());
  if (w.size() != 1) throw MalformedInput("expected a single letter");
  return w[0];
}

}  // namespace

json presentation_to_json(const Presentation& p, const PeripheralStructure& ps) {
  json j;
  j["alphabet"] = alphabet_to_json(p.alphabet);
  j["relators"] = json::array();
  for (const Word& r : p.relators) j["relators"].push_back(p.alphabet.format(r));
  j["peripherals"] = json::array();
  for (const Peripheral& per : ps.peripherals) {
    json jp;
    jp["name"] = per.name;
    jp["rank"] = per.rank;
    jp["alphabet"] = alphabet_to_json(per.alphabet);
    jp["embedding"] = json::array();
    for (const Word& e : per.embedding) jp["embedding"].push_back(p.alphabet.format(e));
    j["peripherals"].push_back(jp);
  }
  return j;
}

void presentation_from_json(const json& j, Presentation& p, PeripheralStructure& ps) {
  p = Presentation{};
  ps = PeripheralStructure{};
  p.alphabet = alphabet_from_json(j.at("alphabet"));
  for (const json& r : j.value("relators", json::array()))
    p.relators.push_back(p.alphabet.parse(r.get<std::string>()));
  for (const json& jp : j.value("peripherals", json::array())) {
    Peripheral per;
    per.name = jp.at("name").get<std::string>();
    per.rank = jp.at("rank").get<int>();
    per.alphabet = alphabet_from_json(jp.at("alphabet"));
    if (per.rank != per.alphabet.size()) throw MalformedInput("peripheral rank mismatch");
    for (const json& e : jp.at("embedding"))
      per.embedding.push_back(p.alphabet.parse(e.get<std::string>()));
    if (static_cast<int>(per.embedding.size()) != per.rank)
      throw MalformedInput("peripheral embedding size mismatch");
    ps.peripherals.push_back(per);
  }
}

json graph_to_json(const StallingsGraph& g) {
  json j;
  j["alphabet"] = alphabet_to_json(g.alphabet);
  j["vertices"] = g.num_vertices();
  j["base"] = g.base;
  j["edges"] = json::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int gen = 0; gen < g.alphabet.size(); ++gen)
      if (g.out[v][gen] >= 0)
        j["edges"].push_back(json::array({v, g.alphabet.name(gen), g.out[v][gen]}));
  return j;
}

StallingsGraph graph_from_json(const json& j) {
  Alphabet alphabet = alphabet_from_json(j.at("alphabet"));
  GraphBuilder b;
  b.alphabet = alphabet;
  b.num_vertices = j.at("vertices").get<int>();
  b.base = j.at("base").get<int>();
  if (b.base < 0 || b.base >= b.num_vertices) throw MalformedInput("base out of range");
  for (const json& e : j.at("edges")) {
    int src = e.at(0).get<int>();
    int gen = alphabet.index_of(e.at(1).get<std::string>());
    int dst = e.at(2).get<int>();
    if (gen < 0 || src < 0 || src >= b.num_vertices || dst < 0 || dst >= b.num_vertices)
      throw MalformedInput("bad edge");
    b.edges.push_back({src, gen, dst});
  }
  // folding a folded graph is the identity up to renumbering; it also
  // validates determinism of the input
  return fold(b);
}

json fsa_to_json(const Fsa& a, const Alphabet& alphabet) {
  json j;
  j["alphabet"] = alphabet_to_json(alphabet);
  j["states"] = a.num_states;
  j["initial"] = a.initial;
  j["accepting"] = json::array();
  for (int q = 0; q < a.num_states; ++q)
    if (a.accepting[q]) j["accepting"].push_back(q);
  j["transitions"] = json::array();
  for (int q = 0; q < a.num_states; ++q)
    for (const auto& [l, dst] : a.trans[q])
      j["transitions"].push_back(json::array({q, alphabet.format_letter(l), dst}));
  return j;
}

Fsa fsa_from_json(const json& j, const Alphabet& alphabet) {
  Fsa a;
  a.alphabet = signed_alphabet(alphabet.size());
  int n = j.at("states").get<int>();
  for (int q = 0; q < n; ++q) a.add_state(false);
  a.initial = j.at("initial").get<int>();
  if (a.initial < 0 || a.initial >= n) throw MalformedInput("initial state out of range");
  for (const json& q : j.at("accepting")) {
    int s = q.get<int>();
    if (s < 0 || s >= n) throw MalformedInput("accepting state out of range");
    a.accepting[s] = 1;
  }
  for (const json& t : j.at("transitions")) {
    int src = t.at(0).get<int>();
    Letter l = parse_letter(t.at(1), alphabet);
    int dst = t.at(2).get<int>();
    if (src < 0 || src >= n || dst < 0 || dst >= n) throw MalformedInput("transition out of range");
    a.add_trans(src, l, dst);
  }
  // detect determinism so downstream code can skip subset construction
  a.deterministic = true;
  for (int q = 0; q < n && a.deterministic; ++q) {
    std::set<Letter> seen;
    for (const auto& [l, dst] : a.trans[q])
      if (!seen.insert(l).second) a.deterministic = false;
  }
  return a;
}

namespace {

json pair_letter_to_json(Letter l, const Alphabet& alphabet) {
  if (l == 0) return "_";
  return alphabet.format_letter(l);
}

Letter pair_letter_from_json(const json& j, const Alphabet& alphabet) {
  if (j.get<std::string>() == "_") return 0;
  return parse_letter(j, alphabet);
}

}  // namespace

json pairfsa_to_json(const PairFsa& a, const Alphabet& alphabet) {
  json j;
  j["alphabet"] = alphabet_to_json(alphabet);
  j["states"] = a.core.num_states;
  j["initial"] = a.core.initial;
  j["accepting"] = json::array();
  for (int q = 0; q < a.core.num_states; ++q)
    if (a.core.accepting[q]) j["accepting"].push_back(q);
  j["transitions"] = json::array();
  for (int q = 0; q < a.core.num_states; ++q)
    for (const auto& [sym, dst] : a.core.trans[q])
      j["transitions"].push_back(json::array(
          {q,
           json::array({pair_letter_to_json(sym.first, alphabet),
                        pair_letter_to_json(sym.second, alphabet)}),
           dst}));
  return j;
}

PairFsa pairfsa_from_json(const json& j, const Alphabet& alphabet) {
  PairFsa a;
  a.num_gens = alphabet.size();
  a.core.alphabet = pair_alphabet(a.num_gens);
  int n = j.at("states").get<int>();
  for (int q = 0; q < n; ++q) a.core.add_state(false);
  a.core.initial = j.at("initial").get<int>();
  if (a.core.initial < 0 || a.core.initial >= n)
    throw MalformedInput("initial state out of range");
  for (const json& q : j.at("accepting")) {
    int s = q.get<int>();
    if (s < 0 || s >= n) throw MalformedInput("accepting state out of range");
    a.core.accepting[s] = 1;
  }
  for (const json& t : j.at("transitions")) {
    int src = t.at(0).get<int>();
    Letter l1 = pair_letter_from_json(t.at(1).at(0), alphabet);
    Letter l2 = pair_letter_from_json(t.at(1).at(1), alphabet);
    int dst = t.at(2).get<int>();
    if (src < 0 || src >= n || dst < 0 || dst >= n) throw MalformedInput("transition out of range");
    if (l1 == 0 && l2 == 0) throw MalformedInput("(_,_) is not a symbol");
    a.core.add_trans(src, {l1, l2}, dst);
  }
  a.core.deterministic = true;
  for (int q = 0; q < n && a.core.deterministic; ++q) {
    std::set<PairSym> seen;
    for (const auto& [sym, dst] : a.core.trans[q])
      if (!seen.insert(sym).second) a.core.deterministic = false;
  }
  return a;
}

json structure_to_json(const AutomaticStructure& s, const std::string& builtin_spec) {
  json j;
  j["alphabet"] = alphabet_to_json(s.alphabet);
  if (!builtin_spec.empty()) {
    j["builtin"] = builtin_spec;
    return j;
  }
  j["word_acceptor"] = fsa_to_json(s.word_acceptor, s.alphabet);
  j["m_eps"] = pairfsa_to_json(s.m_eps, s.alphabet);
  j["multipliers"] = json::object();
  for (int g = 0; g < s.alphabet.size(); ++g) {
    j["multipliers"][s.alphabet.format_letter(g + 1)] = pairfsa_to_json(s.mult_pos[g], s.alphabet);
    j["multipliers"][s.alphabet.format_letter(-(g + 1))] =
        pairfsa_to_json(s.mult_neg[g], s.alphabet);
  }
  j["unique_reps"] = s.unique_reps;
  j["geodesic"] = s.geodesic;
  return j;
}

AutomaticStructure structure_from_json(const json& j) {
  if (j.contains("builtin")) return parse_structure_spec(j.at("builtin").get<std::string>());
  AutomaticStructure s;
  s.alphabet = alphabet_from_json(j.at("alphabet"));
  s.word_acceptor = fsa_from_json(j.at("word_acceptor"), s.alphabet);
  s.m_eps = pairfsa_from_json(j.at("m_eps"), s.alphabet);
  for (int g = 0; g < s.alphabet.size(); ++g) {
    s.mult_pos.push_back(
        pairfsa_from_json(j.at("multipliers").at(s.alphabet.format_letter(g + 1)), s.alphabet));
    s.mult_neg.push_back(
        pairfsa_from_json(j.at("multipliers").at(s.alphabet.format_letter(-(g + 1))), s.alphabet));
  }
  s.unique_reps = j.value("unique_reps", true);
  s.geodesic = j.value("geodesic", false);
  return s;
}

namespace {

// spec := name '(' arg {',' arg} ')' ; args of freeproduct are specs,
// args of free/abelian are generator names
struct SpecParser {
  const std::string& text;
  size_t pos = 0;

  explicit SpecParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) throw MalformedInput("expected identifier in structure spec");
    return text.substr(start, pos - start);
  }

  AutomaticStructure parse() {
    std::string head = ident();
    if (!eat('(')) throw MalformedInput("expected '(' in structure spec");
    if (head == "free" || head == "abelian") {
      std::vector<std::string> names;
      do {
        names.push_back(ident());
      } while (eat(','));
      if (!eat(')')) throw MalformedInput("expected ')' in structure spec");
      Alphabet a(names);
      return head == "free" ? builtin_shortlex_free(a) : builtin_shortlex_abelian(a);
    }
    if (head == "freeproduct") {
      AutomaticStructure left = parse();
      if (!eat(',')) throw MalformedInput("freeproduct needs two factors");
      AutomaticStructure right = parse();
      if (!eat(')')) throw MalformedInput("expected ')' in structure spec");
      return builtin_free_product(left, right);
    }
    throw MalformedInput("unknown structure family: " + head);
  }
};

}  // namespace

AutomaticStructure parse_structure_spec(const std::string& spec) {
  SpecParser p(spec);
  AutomaticStructure s = p.parse();
  p.skip_ws();
  if (p.pos != spec.size()) throw MalformedInput("trailing characters in structure spec");
  return s;
}

}  // namespace cgt

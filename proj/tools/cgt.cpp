#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cgt/json_io.hpp"
#include "cgt/oracles.hpp"
#include "cgt/relhyp.hpp"

using namespace cgt;

namespace {

// exit codes shared by the subcommands
constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitBudget = 2;
constexpr int kExitParse = 3;
constexpr int kExitBadBundle = 4;
constexpr int kExitContradiction = 5;
constexpr int kExitNoFamily = 6;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot open " + path + " for writing");
  out << text;
}

Alphabet alphabet_from_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return Alphabet(names);
}

std::vector<Word> parse_words(const Alphabet& a, const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const std::string& t : texts) out.push_back(a.parse(t));
  return out;
}

AutomaticStructure resolve_structure(const std::string& arg) {
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
    return structure_from_json(read_json_file(arg));
  return parse_structure_spec(arg);
}

// "2,0;0,1" -> rows of a lattice basis
IntMat parse_int_matrix(const std::string& text) {
  IntMat rows;
  IntVec row;
  std::string cur;
  auto flush_num = [&]() {
    if (!cur.empty()) {
      row.push_back(std::stoll(cur));
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == ',') {
      flush_num();
    } else if (c == ';') {
      flush_num();
      rows.push_back(row);
      row.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  flush_num();
  if (!row.empty()) rows.push_back(row);
  return rows;
}

struct GraphArgs {
  std::string alphabet_csv;
  std::vector<std::string> gens;
  std::string dot_path;
  std::string out_path;

  StallingsGraph build() const {
    Alphabet a = alphabet_from_csv(alphabet_csv);
    return stallings_graph(a, parse_words(a, gens));
  }
};

void add_graph_args(CLI::App* cmd, GraphArgs& g) {
  cmd->add_option("--alphabet", g.alphabet_csv, "generators, comma separated")->required();
  cmd->add_option("--gen", g.gens, "subgroup generator word (repeatable)");
  cmd->add_option("--dot", g.dot_path, "write the folded graph as DOT");
  cmd->add_option("--out", g.out_path, "write the folded graph as JSON");
}

void emit_graph_outputs(const StallingsGraph& g, const GraphArgs& args) {
  if (!args.dot_path.empty()) write_file(args.dot_path, to_dot(g));
  if (!args.out_path.empty()) write_file(args.out_path, graph_to_json(g).dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subgroup membership toolkit for free and relatively hyperbolic groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  GraphArgs fold_args, rank_args, index_args;
  auto* cmd_fold = app.add_subcommand("fold", "fold a subgroup's bouquet");
  add_graph_args(cmd_fold, fold_args);
  auto* cmd_rank = app.add_subcommand("rank", "rank and free basis of a subgroup");
  add_graph_args(cmd_rank, rank_args);
  auto* cmd_index = app.add_subcommand("index", "index of a subgroup of the free group");
  add_graph_args(cmd_index, index_args);

  GraphArgs inter_args, conj_args;
  std::vector<std::string> gens2_inter, gens2_conj;
  auto* cmd_inter = app.add_subcommand("intersect", "intersection of two subgroups");
  add_graph_args(cmd_inter, inter_args);
  cmd_inter->add_option("--gen2", gens2_inter, "second subgroup generator (repeatable)");
  auto* cmd_conj = app.add_subcommand("conjugate", "conjugacy test for two subgroups");
  add_graph_args(cmd_conj, conj_args);
  cmd_conj->add_option("--gen2", gens2_conj, "second subgroup generator (repeatable)");

  std::string pres_path, target_text, trace_dir;
  std::vector<std::string> complete_gens;
  int rounds = 10;
  bool glue_closure = false;
  auto* cmd_complete = app.add_subcommand("complete", "positive semi-algorithm");
  cmd_complete->add_option("--presentation", pres_path, "presentation JSON")->required();
  cmd_complete->add_option("--gen", complete_gens, "subgroup generator (repeatable)");
  cmd_complete->add_option("--target", target_text, "element to test")->required();
  cmd_complete->add_option("--rounds", rounds, "round budget");
  cmd_complete->add_flag("--glue-closure", glue_closure, "glue the cyclic relator closure");
  cmd_complete->add_option("--trace-dir", trace_dir, "write one DOT per round here");

  std::string ls_structure, ls_dot;
  std::vector<std::string> ls_gens;
  int ls_budget = 50;
  auto* cmd_ls = app.add_subcommand("l-stallings", "L-Stallings graph of a subgroup");
  cmd_ls->add_option("--structure", ls_structure, "builtin spec or bundle JSON")->required();
  cmd_ls->add_option("--gen", ls_gens, "subgroup generator (repeatable)");
  cmd_ls->add_option("--budget", ls_budget, "growth step budget");
  cmd_ls->add_option("--emit-dot", ls_dot, "write the graph as DOT");

  std::string m_pres, m_structure, m_subgroup, m_element, m_cert, m_schedule = "diag";
  std::vector<std::string> m_gens;
  int m_budget = 30;
  auto* cmd_member = app.add_subcommand("member", "decide membership in a relatively hyperbolic group");
  cmd_member->add_option("--presentation", m_pres, "presentation JSON with peripherals")->required();
  cmd_member->add_option("--structure", m_structure, "builtin spec or bundle JSON")->required();
  cmd_member->add_option("--subgroup", m_subgroup, "JSON file with a generators array");
  cmd_member->add_option("--gen", m_gens, "subgroup generator (repeatable)");
  cmd_member->add_option("--element", m_element, "element to test")->required();
  cmd_member->add_option("--budget", m_budget, "macro-step budget");
  cmd_member->add_option("--schedule", m_schedule, "diag or alt")
      ->check(CLI::IsMember({"diag", "alt"}));
  cmd_member->add_option("--certificate", m_cert, "write the verdict certificate JSON");

  std::string o_family, o_word, o_lattice;
  std::vector<std::string> o_gens;
  std::string o_alphabet = "a,b";
  int o_depth = 8, o_rank = 2, o_tdiv = 0;
  auto* cmd_oracle = app.add_subcommand("oracle", "naive reference membership checks");
  cmd_oracle->add_option("--family", o_family, "free, abelian or toral")->required();
  cmd_oracle->add_option("--alphabet", o_alphabet, "generators, comma separated");
  cmd_oracle->add_option("--gen", o_gens, "subgroup generator (repeatable)");
  cmd_oracle->add_option("--word", o_word, "element to test")->required();
  cmd_oracle->add_option("--depth", o_depth, "search depth (free family)");
  cmd_oracle->add_option("--rank", o_rank, "ambient rank (abelian family)");
  cmd_oracle->add_option("--lattice", o_lattice, "rows like 2,0;0,1 (toral family)");
  cmd_oracle->add_option("--t-divisor", o_tdiv, "t exponent divisor, 0 = no t (toral family)");

  std::string v_structure;
  int v_depth = 4;
  auto* cmd_validate = app.add_subcommand("validate-structure", "consistency-check a structure");
  cmd_validate->add_option("--structure", v_structure, "builtin spec or bundle JSON")->required();
  cmd_validate->add_option("--depth", v_depth, "word length bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_fold) {
      StallingsGraph g = fold_args.build();
      emit_graph_outputs(g, fold_args);
      if (as_json)
        std::cout << graph_to_json(g).dump() << "\n";
      else
        std::cout << "vertices " << g.num_vertices() << " edges " << g.num_edges() << "\n";
      return 0;
    }
    if (*cmd_rank) {
      StallingsGraph g = rank_args.build();
      emit_graph_outputs(g, rank_args);
      auto [rank, basis] = rank_and_basis(g);
      if (as_json) {
        json j;
        j["rank"] = rank;
        j["basis"] = json::array();
        for (const Word& w : basis) j["basis"].push_back(g.alphabet.format(w));
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "rank " << rank << "\n";
        for (const Word& w : basis) std::cout << g.alphabet.format(w) << "\n";
      }
      return 0;
    }
    if (*cmd_index) {
      StallingsGraph g = index_args.build();
      emit_graph_outputs(g, index_args);
      auto idx = index_free(g);
      if (as_json) {
        json j;
        j["index"] = idx ? json(*idx) : json();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "index " << (idx ? std::to_string(*idx) : "infinite") << "\n";
      }
      return 0;
    }
    if (*cmd_inter) {
      Alphabet a = alphabet_from_csv(inter_args.alphabet_csv);
      StallingsGraph g1 = stallings_graph(a, parse_words(a, inter_args.gens));
      StallingsGraph g2 = stallings_graph(a, parse_words(a, gens2_inter));
      StallingsGraph g = intersect_free(g1, g2);
      emit_graph_outputs(g, inter_args);
      auto [rank, basis] = rank_and_basis(g);
      if (as_json) {
        json j;
        j["rank"] = rank;
        j["basis"] = json::array();
        for (const Word& w : basis) j["basis"].push_back(a.format(w));
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "rank " << rank << "\n";
        for (const Word& w : basis) std::cout << a.format(w) << "\n";
      }
      return 0;
    }
    if (*cmd_conj) {
      Alphabet a = alphabet_from_csv(conj_args.alphabet_csv);
      StallingsGraph g1 = stallings_graph(a, parse_words(a, conj_args.gens));
      StallingsGraph g2 = stallings_graph(a, parse_words(a, gens2_conj));
      auto x = conjugate_free(g1, g2);
      if (as_json) {
        json j;
        j["conjugate"] = x.has_value();
        if (x) j["conjugator"] = a.format(*x);
        std::cout << j.dump() << "\n";
      } else if (x) {
        std::cout << "conjugate by " << (x->empty() ? "1" : a.format(*x)) << "\n";
      } else {
        std::cout << "not conjugate\n";
      }
      return x ? 0 : 1;
    }
    if (*cmd_complete) {
      Presentation p;
      PeripheralStructure ps;
      presentation_from_json(read_json_file(pres_path), p, ps);
      Word target = p.alphabet.parse(target_text);
      CompletionTrace trace = nullptr;
      if (!trace_dir.empty())
        trace = [&](const CompletionState& s) {
          write_file(trace_dir + "/round" + std::to_string(s.round) + ".dot", to_dot(s.graph));
        };
      CompletionResult r = run_completion(p, parse_words(p.alphabet, complete_gens), target,
                                          rounds, glue_closure, trace);
      if (auto* m = std::get_if<Member>(&r)) {
        if (as_json)
          std::cout << json{{"verdict", "member"}, {"rounds", m->rounds}}.dump() << "\n";
        else
          std::cout << "member after " << m->rounds << " rounds\n";
        return kExitMember;
      }
      int done = std::get<BudgetExhausted>(r).rounds;
      if (as_json)
        std::cout << json{{"verdict", "budget-exhausted"}, {"rounds", done}}.dump() << "\n";
      else
        std::cout << "budget exhausted after " << done << " rounds\n";
      return kExitBudget;
    }
    if (*cmd_ls) {
      AutomaticStructure s = resolve_structure(ls_structure);
      LStallingsResult r =
          compute_l_stallings(s, parse_words(s.alphabet, ls_gens), ls_budget);
      const LStallingsGraph& g = std::holds_alternative<LStallingsGraph>(r)
                                     ? std::get<LStallingsGraph>(r)
                                     : std::get<LBudgetExhausted>(r).partial;
      if (!ls_dot.empty()) write_file(ls_dot, to_dot(g.graph));
      if (as_json) {
        json j = graph_to_json(g.graph);
        j["certified"] = g.certified;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (g.certified ? "certified" : "budget exhausted") << ", vertices "
                  << g.graph.num_vertices() << " edges " << g.graph.num_edges() << "\n";
      }
      return g.certified ? 0 : kExitBudget;
    }
    if (*cmd_member) {
      RelHypInstance inst;
      try {
        presentation_from_json(read_json_file(m_pres), inst.presentation, inst.peripherals);
        inst.structure = resolve_structure(m_structure);
      } catch (const json::exception& e) {
        std::cerr << "bad bundle: " << e.what() << "\n";
        return kExitBadBundle;
      }
      // translations for X letters outside A, found through the word problem
      for (int g = 0; g < inst.structure.alphabet.size(); ++g)
        if (inst.presentation.alphabet.index_of(inst.structure.alphabet.name(g)) < 0)
          inst.x_translation[g] = find_u_x(inst, g);
      std::vector<Word> gens = parse_words(inst.presentation.alphabet, m_gens);
      if (!m_subgroup.empty()) {
        json sub = read_json_file(m_subgroup);
        for (const json& t : sub.at("generators"))
          gens.push_back(inst.presentation.alphabet.parse(t.get<std::string>()));
      }
      Word g = inst.presentation.alphabet.parse(m_element);
      Schedule sched = m_schedule == "alt" ? Schedule::Alternating : Schedule::Diagonal;
      MembershipVerdict v;
      try {
        v = decide_membership(inst, gens, g, m_budget, sched);
      } catch (const ContradictionError& e) {
        std::cerr << "contradiction: " << e.what() << "\n";
        return kExitContradiction;
      }
      if (auto* m = std::get_if<MemberVerdict>(&v)) {
        if (as_json)
          std::cout << json{{"verdict", "member"}, {"steps", m->steps}}.dump() << "\n";
        else
          std::cout << "member after " << m->steps << " steps\n";
        return kExitMember;
      }
      if (auto* nm = std::get_if<NonMemberVerdict>(&v)) {
        json cert;
        cert["verdict"] = "non-member";
        cert["steps"] = nm->steps;
        cert["candidate"] = json::array();
        for (const auto& item : nm->candidate.items)
          cert["candidate"].push_back(
              {{"conjugator", inst.presentation.alphabet.format(item.conjugator)},
               {"peripheral", item.peripheral},
               {"tuple", item.tuple}});
        cert["graph"] = graph_to_json(nm->certificate.graph);
        if (!m_cert.empty()) write_file(m_cert, cert.dump(2) + "\n");
        if (as_json)
          std::cout << cert.dump() << "\n";
        else
          std::cout << "non-member after " << nm->steps << " steps\n";
        return kExitNonMember;
      }
      int steps = std::get<VerdictBudgetExhausted>(v).steps;
      if (as_json)
        std::cout << json{{"verdict", "budget-exhausted"}, {"steps", steps}}.dump() << "\n";
      else
        std::cout << "budget exhausted after " << steps << " steps\n";
      return kExitBudget;
    }
    if (*cmd_oracle) {
      Alphabet a = alphabet_from_csv(o_alphabet);
      std::vector<Word> gens = parse_words(a, o_gens);
      Word w = a.parse(o_word);
      bool member;
      if (o_family == "free") {
        member = free_membership_bruteforce(gens, w, o_depth);
      } else if (o_family == "abelian") {
        member = abelian_membership(o_rank, gens, w);
      } else if (o_family == "toral") {
        LatticeSubgroup r = hnf(2, parse_int_matrix(o_lattice));
        member = toral_membership(r, o_tdiv, w);
      } else {
        std::cerr << "no oracle family: " << o_family << "\n";
        return kExitNoFamily;
      }
      if (as_json)
        std::cout << json{{"member", member}}.dump() << "\n";
      else
        std::cout << (member ? "member" : "non-member") << "\n";
      return member ? kExitMember : kExitNonMember;
    }
    if (*cmd_validate) {
      AutomaticStructure s = resolve_structure(v_structure);
      ValidationReport r = validate(s, v_depth);
      if (as_json) {
        json j;
        j["ok"] = r.ok();
        j["words_checked"] = r.words_checked;
        j["violations"] = r.violations;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (r.ok() ? "ok" : "violations found") << ", " << r.words_checked
                  << " words checked\n";
        for (const std::string& v : r.violations) std::cout << "  " << v << "\n";
      }
      return r.ok() ? 0 : kExitBadBundle;
    }
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}

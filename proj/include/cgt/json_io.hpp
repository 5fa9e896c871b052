#ifndef CGT_JSON_IO_HPP
#define CGT_JSON_IO_HPP

#include <json.hpp>

#include "cgt/autostruct.hpp"
#include "cgt/stallings.hpp"

namespace cgt {

using nlohmann::json;

// Presentation files bundle the alphabet, the relators and the peripheral
// data. Words are written in the alphabet's text syntax ("a*b^-1").
json presentation_to_json(const Presentation& p, const PeripheralStructure& ps);
void presentation_from_json(const json& j, Presentation& p, PeripheralStructure& ps);

json graph_to_json(const StallingsGraph& g);
StallingsGraph graph_from_json(const json& j);

// One-tape automata: letters as "a" / "a^-1" strings over a named alphabet.
json fsa_to_json(const Fsa& a, const Alphabet& alphabet);
Fsa fsa_from_json(const json& j, const Alphabet& alphabet);

// Two-tape automata: symbols as ["a","b^-1"] pairs, "_" for the pad.
json pairfsa_to_json(const PairFsa& a, const Alphabet& alphabet);
PairFsa pairfsa_from_json(const json& j, const Alphabet& alphabet);

// Full structure bundle. A bundle with a "builtin" spec string is rebuilt
// from the spec; otherwise every component automaton must be present (the
// oracle is absent in that case, which the algorithms never need).
json structure_to_json(const AutomaticStructure& s, const std::string& builtin_spec = "");
AutomaticStructure structure_from_json(const json& j);

// Builtin spec strings: free(a,b), abelian(a,b), freeproduct(S1,S2).
AutomaticStructure parse_structure_spec(const std::string& spec);

}  // namespace cgt

#endif

#ifndef HIGMAN_JSON_IO_HPP_
#define HIGMAN_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "higman/blocks.hpp"
#include "higman/envelope.hpp"
#include "higman/factorization.hpp"
#include "higman/macneille.hpp"
#include "higman/upset.hpp"

// Stable JSON and DOT surfaces.
//
//   Alphabet:   {"letters":["a","b"],"order":[["a","b"]],
//                "involution":[["a","a"],["b","b"]]}
//               order pairs mean first <= second; a missing involution is
//               the identity.
//   Word:       array of letter names, or a plain string when every letter
//               name is a single character; "" is the empty word.
//   UpSet:      {"gens":["ab","ba"]}; [] is the empty segment, [""] is A*.
//   DownSetMax: {"maxgens":["a","b"]}
//   Factorization: {"factors":[{"gens":["a"]},{"gens":["b"]}]}
//   Envelope:   {"points":[UpSet...],"x":0,"y":k,"dist":[[UpSet...]...]}
//   Transitions:{"states":n,"trans":[[p,"a",q],...]}
//   BlockPath:  {"blocks":[[0,1],[1,2]],"cuts":[1]}
namespace higman::io {

using json = nlohmann::json;

AlphabetSpec alphabet_spec_from_json(const json& j);
Alphabet alphabet_from_json(const json& j);
json alphabet_to_json(const Alphabet& a);

Word word_from_json(const Alphabet& a, const json& j);
json word_to_json(const Alphabet& a, const Word& w);
// Compact form: the raw string for single-character alphabets, otherwise a
// JSON array literal.
Word word_from_text(const Alphabet& a, const std::string& text);

UpSet upset_from_json(const Alphabet& a, const json& j);
json upset_to_json(const UpSet& f);

json downset_to_json(const DownSetMax& d);
DownSetMax downset_from_json(const Alphabet& a, const json& j);

json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Alphabet& a, const json& j);

json envelope_to_json(const EnvelopeSpace& s);
EnvelopeSpace envelope_from_json(const Alphabet& a, const json& j);

json transition_system_to_json(const TransitionSystem& m);
TransitionSystem transition_system_from_json(const Alphabet& a,
                                             const json& j);

json block_path_to_json(const BlockPath& b);

// DOT text of the transition graph, loops suppressed, edge labels listing
// the letters from the lower-indexed endpoint towards the higher one.
std::string envelope_dot(const EnvelopeSpace& s);

// DOT text with one fill colour per block and doubled borders on cut
// vertices.
std::string blocks_dot(const EnvelopeSpace& s, const BlockPath& path);

}  // namespace higman::io

#endif  // HIGMAN_JSON_IO_HPP_

#include "higman/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace higman::io {

namespace {

const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

std::string expect_string(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

size_t expect_index(const json& j, const char* what, size_t bound) {
  if (!j.is_number_unsigned() || j.get<size_t>() >= bound) {
    throw ParseError(std::string(what) + " out of range");
  }
  return j.get<size_t>();
}

Letter letter_from_name(const Alphabet& a, const std::string& name) {
  if (auto l = a.find(name)) return *l;
  throw ParseError("unknown letter: " + name);
}

}  // namespace

AlphabetSpec alphabet_spec_from_json(const json& j) {
  AlphabetSpec spec;
  const json& letters = expect(j, "letters");
  if (!letters.is_array() || letters.empty()) {
    throw ParseError("\"letters\" must be a non-empty array");
  }
  for (const auto& l : letters) spec.letters.push_back(expect_string(l, "letter"));
  auto read_pairs = [&](const char* key,
                        std::vector<std::pair<std::string, std::string>>& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_array()) {
      throw ParseError(std::string("\"") + key + "\" must be an array of pairs");
    }
    for (const auto& p : j.at(key)) {
      if (!p.is_array() || p.size() != 2) {
        throw ParseError(std::string("\"") + key + "\" entries must be pairs");
      }
      out.emplace_back(expect_string(p[0], key), expect_string(p[1], key));
    }
  };
  read_pairs("order", spec.order);
  read_pairs("involution", spec.involution);
  return spec;
}

Alphabet alphabet_from_json(const json& j) {
  return Alphabet::validate(alphabet_spec_from_json(j));
}

json alphabet_to_json(const Alphabet& a) {
  json letters = json::array();
  for (Letter l = 0; l < a.size(); ++l) letters.push_back(a.name(l));
  json order = json::array();
  for (Letter p = 0; p < a.size(); ++p) {
    for (Letter q = 0; q < a.size(); ++q) {
      if (p != q && a.leq(p, q)) order.push_back({a.name(p), a.name(q)});
    }
  }
  json involution = json::array();
  for (Letter l = 0; l < a.size(); ++l) {
    involution.push_back({a.name(l), a.name(a.bar(l))});
  }
  return json{{"letters", letters}, {"order", order}, {"involution", involution}};
}

Word word_from_json(const Alphabet& a, const json& j) {
  std::vector<Letter> ls;
  if (j.is_string()) {
    if (!a.single_char_names()) {
      throw ParseError(
          "string-form words need single-character letter names; use an "
          "array of letters");
    }
    for (char c : j.get<std::string>()) {
      ls.push_back(letter_from_name(a, std::string(1, c)));
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      ls.push_back(letter_from_name(a, expect_string(item, "letter")));
    }
  } else {
    throw ParseError("a word must be a string or an array of letters");
  }
  return Word(std::move(ls));
}

json word_to_json(const Alphabet& a, const Word& w) {
  if (a.single_char_names()) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += a.name(w[i]);
    return json(s);
  }
  json arr = json::array();
  for (size_t i = 0; i < w.size(); ++i) arr.push_back(a.name(w[i]));
  return arr;
}

Word word_from_text(const Alphabet& a, const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad word literal: ") + e.what());
    }
    return word_from_json(a, j);
  }
  return word_from_json(a, json(text));
}

UpSet upset_from_json(const Alphabet& a, const json& j) {
  const json& gens = expect(j, "gens");
  if (!gens.is_array()) throw ParseError("\"gens\" must be an array of words");
  std::vector<Word> words;
  for (const auto& g : gens) words.push_back(word_from_json(a, g));
  return UpSet::of(a, std::move(words));
}

json upset_to_json(const UpSet& f) {
  json gens = json::array();
  for (const Word& g : f.gens()) gens.push_back(word_to_json(f.alphabet(), g));
  return json{{"gens", gens}};
}

json downset_to_json(const DownSetMax& d) {
  json gens = json::array();
  for (const Word& g : d.maxgens) gens.push_back(word_to_json(*d.alphabet, g));
  return json{{"maxgens", gens}};
}

DownSetMax downset_from_json(const Alphabet& a, const json& j) {
  const json& gens = expect(j, "maxgens");
  if (!gens.is_array()) throw ParseError("\"maxgens\" must be an array");
  std::vector<Word> words;
  for (const auto& g : gens) words.push_back(word_from_json(a, g));
  return DownSetMax{&a, maximal_words(a, std::move(words))};
}

json factorization_to_json(const Factorization& f) {
  json factors = json::array();
  for (const UpSet& u : f.factors) factors.push_back(upset_to_json(u));
  return json{{"factors", factors}};
}

Factorization factorization_from_json(const Alphabet& a, const json& j) {
  const json& factors = expect(j, "factors");
  if (!factors.is_array()) throw ParseError("\"factors\" must be an array");
  Factorization out;
  for (const auto& f : factors) out.factors.push_back(upset_from_json(a, f));
  return out;
}

json envelope_to_json(const EnvelopeSpace& s) {
  json points = json::array();
  for (const UpSet& p : s.points) points.push_back(upset_to_json(p));
  json dist = json::array();
  for (const auto& row : s.dist) {
    json r = json::array();
    for (const UpSet& d : row) r.push_back(upset_to_json(d));
    dist.push_back(std::move(r));
  }
  return json{{"points", points}, {"x", s.x}, {"y", s.y}, {"dist", dist}};
}

EnvelopeSpace envelope_from_json(const Alphabet& a, const json& j) {
  EnvelopeSpace s;
  s.alphabet = &a;
  const json& points = expect(j, "points");
  if (!points.is_array() || points.empty()) {
    throw ParseError("\"points\" must be a non-empty array");
  }
  for (const auto& p : points) s.points.push_back(upset_from_json(a, p));
  const size_t n = s.points.size();
  s.x = expect_index(expect(j, "x"), "\"x\"", n);
  s.y = expect_index(expect(j, "y"), "\"y\"", n);
  const json& dist = expect(j, "dist");
  if (!dist.is_array() || dist.size() != n) {
    throw ParseError("\"dist\" must be an n-by-n matrix");
  }
  for (const auto& row : dist) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError("\"dist\" must be an n-by-n matrix");
    }
    std::vector<UpSet> r;
    for (const auto& d : row) r.push_back(upset_from_json(a, d));
    s.dist.push_back(std::move(r));
  }
  return s;
}

json transition_system_to_json(const TransitionSystem& m) {
  json trans = json::array();
  for (const Transition& t : m.trans) {
    trans.push_back({t.from, m.alphabet->name(t.letter), t.to});
  }
  return json{{"states", m.states}, {"trans", trans}};
}

TransitionSystem transition_system_from_json(const Alphabet& a,
                                             const json& j) {
  TransitionSystem m;
  m.alphabet = &a;
  const json& states = expect(j, "states");
  if (!states.is_number_unsigned()) {
    throw ParseError("\"states\" must be a non-negative count");
  }
  m.states = states.get<size_t>();
  const json& trans = expect(j, "trans");
  if (!trans.is_array()) throw ParseError("\"trans\" must be an array");
  for (const auto& t : trans) {
    if (!t.is_array() || t.size() != 3) {
      throw ParseError("transitions must be [from, letter, to] triples");
    }
    m.trans.push_back({expect_index(t[0], "transition state", m.states),
                       letter_from_name(a, expect_string(t[1], "letter")),
                       expect_index(t[2], "transition state", m.states)});
  }
  std::sort(m.trans.begin(), m.trans.end());
  m.trans.erase(std::unique(m.trans.begin(), m.trans.end()), m.trans.end());
  return m;
}

json block_path_to_json(const BlockPath& b) {
  json blocks = json::array();
  for (const auto& block : b.blocks) blocks.push_back(block);
  return json{{"blocks", blocks}, {"cuts", b.cuts}};
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string envelope_dot(const EnvelopeSpace& s) {
  const Alphabet& a = *s.alphabet;
  std::ostringstream out;
  out << "graph envelope {\n";
  for (size_t p = 0; p < s.points.size(); ++p) {
    out << "  p" << p << " [label=\"" << dot_escape(to_string(s.points[p]))
        << "\"";
    if (p == s.x || p == s.y) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (size_t p = 0; p < s.points.size(); ++p) {
    for (size_t q = p + 1; q < s.points.size(); ++q) {
      std::string letters;
      for (Letter c = 0; c < a.size(); ++c) {
        if (member(s.dist[p][q], Word::of(c))) {
          if (!letters.empty()) letters += ",";
          letters += a.name(c);
        }
      }
      if (!letters.empty()) {
        out << "  p" << p << " -- p" << q << " [label=\""
            << dot_escape(letters) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string blocks_dot(const EnvelopeSpace& s, const BlockPath& path) {
  static const char* kPalette[] = {"lightblue",  "lightyellow", "lightpink",
                                   "lightgreen", "lavender",    "wheat",
                                   "mistyrose",  "honeydew"};
  constexpr size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  const Alphabet& a = *s.alphabet;
  std::vector<size_t> block_of(s.points.size(), 0);
  std::vector<bool> is_cut(s.points.size(), false);
  for (size_t b = 0; b < path.blocks.size(); ++b) {
    for (size_t v : path.blocks[b]) block_of[v] = b;
  }
  for (size_t v : path.cuts) is_cut[v] = true;

  std::ostringstream out;
  out << "graph blocks {\n  node [style=filled];\n";
  for (size_t p = 0; p < s.points.size(); ++p) {
    out << "  p" << p << " [label=\"" << dot_escape(to_string(s.points[p]))
        << "\", fillcolor=\"" << kPalette[block_of[p] % kColors] << "\"";
    if (is_cut[p]) out << ", peripheries=2";
    out << "];\n";
  }
  for (size_t p = 0; p < s.points.size(); ++p) {
    for (size_t q = p + 1; q < s.points.size(); ++q) {
      bool edge = false;
      for (Letter c = 0; c < a.size() && !edge; ++c) {
        edge = member(s.dist[p][q], Word::of(c));
      }
      if (edge) out << "  p" << p << " -- p" << q << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace higman::io

#ifndef HIGMAN_TESTS_HELPERS_HPP_
#define HIGMAN_TESTS_HELPERS_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "higman/alphabet.hpp"
#include "higman/upset.hpp"

namespace higman::test {

// Word from single-character letter names.
inline Word W(const Alphabet& a, const std::string& text) {
  std::vector<Letter> ls;
  for (char c : text) {
    auto l = a.find(std::string(1, c));
    if (!l) throw ParseError("test word uses an unknown letter");
    ls.push_back(*l);
  }
  return Word(std::move(ls));
}

inline UpSet U(const Alphabet& a, std::initializer_list<std::string> gens) {
  std::vector<Word> words;
  for (const std::string& g : gens) words.push_back(W(a, g));
  return UpSet::of(a, std::move(words));
}

inline std::vector<Word> words_of(const Alphabet& a,
                                  std::initializer_list<std::string> texts) {
  std::vector<Word> out;
  for (const std::string& t : texts) out.push_back(W(a, t));
  return out;
}

}  // namespace higman::test

#endif  // HIGMAN_TESTS_HELPERS_HPP_

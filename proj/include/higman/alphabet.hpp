#ifndef HIGMAN_ALPHABET_HPP_
#define HIGMAN_ALPHABET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "higman/errors.hpp"

namespace higman {

// Interned letter id; an index into the tables of its Alphabet.
using Letter = int;

struct AlphabetSpec {
  std::vector<std::string> letters;
  // Each pair (a, b) declares a <= b; the stored order is the
  // reflexive-transitive closure of the declared pairs.
  std::vector<std::pair<std::string, std::string>> order;
  // Each pair (a, b) declares bar(a) = b (and bar(b) = a). Letters that do
  // not occur are fixed. Empty means the identity involution.
  std::vector<std::pair<std::string, std::string>> involution;
};

// A finite poset of letters together with an order-preserving involution.
// Letter comparisons are O(1) matrix lookups.
class Alphabet {
 public:
  static Alphabet validate(const AlphabetSpec& spec);

  // Shorthand used throughout the tests: one letter per character. Order
  // pairs are two-character strings, "ab" declaring a <= b; likewise for the
  // involution.
  static Alphabet make(const std::string& letters,
                       const std::vector<std::string>& order = {},
                       const std::vector<std::string>& involution = {});

  int size() const { return static_cast<int>(names_.size()); }
  bool leq(Letter a, Letter b) const {
    return leq_[static_cast<size_t>(a) * names_.size() +
                static_cast<size_t>(b)] != 0;
  }
  Letter bar(Letter a) const { return bar_[static_cast<size_t>(a)]; }
  bool bar_is_identity() const { return bar_is_identity_; }
  const std::string& name(Letter a) const {
    return names_[static_cast<size_t>(a)];
  }
  std::optional<Letter> find(std::string_view name) const;
  bool single_char_names() const { return single_char_; }

  // Letters c with a <= c and b <= c, minimal among those. May be empty.
  const std::vector<Letter>& min_upper_bounds(Letter a, Letter b) const {
    return mubs_[static_cast<size_t>(a) * names_.size() +
                 static_cast<size_t>(b)];
  }
  // Letters c with c <= a, a included.
  const std::vector<Letter>& lowers(Letter a) const {
    return lowers_[static_cast<size_t>(a)];
  }

 private:
  Alphabet() = default;

  std::vector<std::string> names_;
  std::vector<unsigned char> leq_;          // size() x size(), row-major
  std::vector<Letter> bar_;
  std::vector<std::vector<Letter>> mubs_;   // size() x size(), row-major
  std::vector<std::vector<Letter>> lowers_;
  bool single_char_ = true;
  bool bar_is_identity_ = true;
};

// A finite sequence of letters; the empty word is Word().
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word of(Letter a) { return Word(std::vector<Letter>{a}); }

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word prefix(size_t n) const {
    return Word(std::vector<Letter>(letters_.begin(),
                                    letters_.begin() + static_cast<long>(n)));
  }
  Word suffix(size_t from) const {
    return Word(std::vector<Letter>(
        letters_.begin() + static_cast<long>(from), letters_.end()));
  }
  Word without_first() const { return suffix(1); }
  Word without_last() const { return prefix(size() - 1); }

  friend Word operator+(const Word& u, const Word& v) {
    std::vector<Letter> ls = u.letters_;
    ls.insert(ls.end(), v.letters_.begin(), v.letters_.end());
    return Word(std::move(ls));
  }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// The subword-embedding order: u <= v when an injective increasing position
// map h has u[i] <= v[h(i)] letterwise. Greedy matching of each u[i] to the
// leftmost feasible position is exact, because taking an earlier position
// never blocks a later match.
bool higman_leq(const Alphabet& a, const Word& u, const Word& v);

// Reversal with bar applied letterwise. An involution on words that
// reverses concatenation.
Word involute(const Alphabet& a, const Word& w);

// Canonical word order: by length, then lexicographically on letter ids.
bool shortlex_less(const Word& u, const Word& v);

std::string to_string(const Alphabet& a, const Word& w);

}  // namespace higman

#endif  // HIGMAN_ALPHABET_HPP_

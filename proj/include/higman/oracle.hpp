#ifndef HIGMAN_ORACLE_HPP_
#define HIGMAN_ORACLE_HPP_

#include <vector>

#include "higman/alphabet.hpp"
#include "higman/upset.hpp"

// Brute-force ground truth over bounded languages. Everything here works on
// explicit word sets and exhaustive enumeration, independent of the
// antichain algebra it is used to validate; only the alphabet and the word
// type are shared. Exponentially slower than the main path.
namespace higman::oracle {

// An explicit finite truncation F ∩ A^{<=limit}.
struct BoundedLanguage {
  const Alphabet* alphabet = nullptr;
  size_t limit = 0;
  std::vector<Word> words;  // shortlex-sorted, unique, lengths <= limit
};

// All words of length <= limit. Refuses enumerations beyond `cap` words.
std::vector<Word> all_words(const Alphabet& a, size_t limit,
                            size_t cap = 10'000'000);

// Embedding decided by exhaustive search over position maps; the reference
// for the greedy higman_leq.
bool embeds_exhaustive(const Alphabet& a, const Word& u, const Word& v);

BoundedLanguage truncate(const UpSet& f, size_t limit,
                         size_t cap = 10'000'000);

// Words of length <= limit lying above some element of `below`.
std::vector<Word> upclose(const Alphabet& a, const std::vector<Word>& below,
                          size_t limit, size_t cap = 10'000'000);

// Minimal elements of the pairwise concatenation XY, by pairwise comparison.
std::vector<Word> concat_min(const Alphabet& a, const std::vector<Word>& x,
                             const std::vector<Word>& y);

// The truncated concatenation {uv : u in x, v in y, |uv| <= limit}.
std::vector<Word> concat_trunc(const BoundedLanguage& x,
                               const BoundedLanguage& y, size_t limit);

// {u : uw in f} (right) or {u : wu in f} (left), restricted to length
// <= f.limit - |w|. The caller supplies a truncation with enough margin.
std::vector<Word> residual_words(const BoundedLanguage& f, const Word& w,
                                 Side side);

// Minimal / maximal elements by exhaustive pairwise comparison.
std::vector<Word> minimal_exhaustive(const Alphabet& a,
                                     std::vector<Word> words);
std::vector<Word> maximal_exhaustive(const Alphabet& a,
                                     std::vector<Word> words);

std::vector<Word> set_union(std::vector<Word> x, const std::vector<Word>& y);
std::vector<Word> set_intersection(const std::vector<Word>& x,
                                   const std::vector<Word>& y);
std::vector<Word> raw_concat(const std::vector<Word>& x,
                             const std::vector<Word>& y);

bool same_words(const std::vector<Word>& x, const std::vector<Word>& y);

}  // namespace higman::oracle

#endif  // HIGMAN_ORACLE_HPP_

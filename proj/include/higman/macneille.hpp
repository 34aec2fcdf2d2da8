#ifndef HIGMAN_MACNEILLE_HPP_
#define HIGMAN_MACNEILLE_HPP_

#include <vector>

#include "higman/upset.hpp"

namespace higman {

// A finite lower set, stored as the antichain of its maximal elements.
struct DownSetMax {
  const Alphabet* alphabet = nullptr;
  std::vector<Word> maxgens;  // shortlex-sorted, pairwise incomparable

  bool operator==(const DownSetMax&) const = default;
};

// All words reachable from g by deleting positions and lowering letters,
// i.e. the full principal lower set of g.
std::vector<Word> lowered_subwords(const Alphabet& a, const Word& g);

// The lower cone of F: maximal words lying below every generator. The cone
// of the empty segment is all of A* and has no finite description here.
DownSetMax lower_cone(const UpSet& f);

// The upper cone of a word set: the intersection of the principal segments
// over its elements. The empty intersection is A*.
UpSet upper_cone(const Alphabet& a, const std::vector<Word>& words);

// The cone-closure of F: upper cone of its lower cone. Grows the language,
// is idempotent and monotone; the empty segment and A* are fixed.
UpSet closure(const UpSet& f);

bool is_closed(const UpSet& f);

// Closure of the set union: the infimum of closed segments.
UpSet closed_union(const Alphabet& a, const std::vector<UpSet>& fs);

}  // namespace higman

#endif  // HIGMAN_MACNEILLE_HPP_

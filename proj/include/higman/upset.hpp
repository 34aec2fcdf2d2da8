#ifndef HIGMAN_UPSET_HPP_
#define HIGMAN_UPSET_HPP_

#include <string>
#include <vector>

#include "higman/alphabet.hpp"
#include "higman/errors.hpp"

namespace higman {

enum class Side { left, right };

// A final segment (upward-closed language) of A*, stored as the canonical
// antichain of its minimal generators, sorted shortlex. No generators
// encodes the empty segment; the single generator epsilon encodes all of A*,
// the neutral element of concatenation.
//
// The monoid is ordered by reverse inclusion throughout: F <= G means
// F contains G as a language.
class UpSet {
 public:
  static UpSet empty(const Alphabet& a);
  static UpSet all(const Alphabet& a);
  static UpSet principal(const Alphabet& a, Word w);
  // The upward closure of an arbitrary finite word set, canonicalized.
  static UpSet of(const Alphabet& a, std::vector<Word> words);

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::vector<Word>& gens() const { return gens_; }
  bool is_empty() const { return gens_.empty(); }
  bool is_all() const { return gens_.size() == 1 && gens_[0].empty(); }

  bool operator==(const UpSet& other) const { return gens_ == other.gens_; }

 private:
  UpSet(const Alphabet* a, std::vector<Word> gens)
      : alphabet_(a), gens_(std::move(gens)) {}

  const Alphabet* alphabet_ = nullptr;
  std::vector<Word> gens_;

  friend UpSet minimize(const Alphabet& a, std::vector<Word> words);
  friend UpSet concat(const UpSet& f, const UpSet& g);
};

// Deterministic total order; usable as a container comparator.
bool upset_less(const UpSet& f, const UpSet& g);

// Minimal elements of the input word set: the canonical generators of its
// upward closure.
UpSet minimize(const Alphabet& a, std::vector<Word> words);
std::vector<Word> minimal_words(const Alphabet& a, std::vector<Word> words);
std::vector<Word> maximal_words(const Alphabet& a, std::vector<Word> words);

bool member(const UpSet& f, const Word& w);

// Language containment F >= G (as sets).
bool contains(const UpSet& f, const UpSet& g);

// The concatenation FG. The pairwise product of two generator antichains is
// itself an antichain of full cardinality |F||G|, which is asserted rather
// than re-minimized.
UpSet concat(const UpSet& f, const UpSet& g);

// Set union of the segments: the lattice meet under reverse inclusion.
UpSet union_meet(const UpSet& f, const UpSet& g);

// The antichain of minimal common upper bounds of two words. Every element
// has length at most |u| + |v|.
std::vector<Word> min_upper_bounds(const Alphabet& a, const Word& u,
                                   const Word& v);

// Set intersection of the segments: the lattice join under reverse
// inclusion.
UpSet intersect(const UpSet& f, const UpSet& g);

// Word quotient: {u : uw in F} for side == right, {u : wu in F} for
// side == left. Computed one letter at a time on the generators.
UpSet quotient(const UpSet& f, const Word& w, Side side);

// Residual: the largest language r with rB ⊆ F (right) or Br ⊆ F (left);
// the least element of {r : F <= r·B} under reverse inclusion. The residual
// by the empty segment is all of A*.
UpSet residual(const UpSet& f, const UpSet& b, Side side);

// Minimal generator length. gamma(FG) = gamma(F) + gamma(G) and
// gamma(F) == 0 exactly for A*. Undefined on the empty segment.
size_t graduation(const UpSet& f);

// Letterwise bar plus reversal, applied to the generators. Reverses
// concatenation and preserves containment.
UpSet involute(const UpSet& f);

std::string to_string(const UpSet& f);

}  // namespace higman

#endif  // HIGMAN_UPSET_HPP_

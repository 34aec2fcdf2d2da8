#ifndef HIGMAN_ENVELOPE_HPP_
#define HIGMAN_ENVELOPE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "higman/upset.hpp"

namespace higman {

// A finite metric space whose distance values are final segments, with two
// distinguished endpoints. For spaces produced by build_envelope the points
// are the residuals of F and carry their own value as label; glued spaces
// label each point by its distance from x.
//
// Distance laws, asserted on construction:
//   identity:   d(p,p) = A*, and d(p,q) = A* only if p = q
//   triangle:   d(p,q) contains d(p,r)·d(r,q) as a language
//   involution: d(q,p) = involute(d(p,q))
struct EnvelopeSpace {
  const Alphabet* alphabet = nullptr;
  std::vector<UpSet> points;
  std::vector<std::vector<UpSet>> dist;
  size_t x = 0;
  size_t y = 0;
};

struct Transition {
  size_t from = 0;
  Letter letter = 0;
  size_t to = 0;

  auto operator<=>(const Transition&) const = default;
};

// Letter-labelled transitions over envelope points: reflexive (every letter
// loops at every state), involutive (each transition has its barred
// reverse) and letter-upward-closed.
struct TransitionSystem {
  const Alphabet* alphabet = nullptr;
  size_t states = 0;
  std::vector<Transition> trans;  // sorted, unique

  bool has(size_t from, Letter letter, size_t to) const;
};

// The canonical distance on the value lattice itself:
// the intersection of the right residual of involute(p) by involute(q) with
// the left residual of q by p — the least r with p <= q·involute(r) and
// q <= p·r under reverse inclusion.
UpSet residuation_distance(const UpSet& p, const UpSet& q);

// The smallest hyperconvex space around the two-point space at distance F:
// all intersections of right word-quotients of F, plus A*, with the
// residuation distance. x is the index of A*, y the index of F.
EnvelopeSpace build_envelope(const UpSet& f);

// Asserts the three distance laws; InternalError on violation.
void check_metric_space(const EnvelopeSpace& s);

// Asserts d(p,q) = join over z of the residuation distance between d(z,p)
// and d(z,q) (the join being language intersection).
void check_metricsup(const EnvelopeSpace& s);

TransitionSystem to_transition_system(const EnvelopeSpace& s);

// Keeps only the given states (sorted, duplicate-free) and the transitions
// among them, renumbering states by position.
TransitionSystem restrict_to(const TransitionSystem& m,
                             const std::vector<size_t>& states);

// Least solution of E(p,q) = base(p,q) ∪ Σ_r E(p,r)·E(r,q) over segments,
// by round-robin sweeps; the ascending chain condition makes it terminate.
// Entry (p,q) is the language accepted between p and q.
std::vector<std::vector<UpSet>> automaton_distance_matrix(
    const TransitionSystem& m);

UpSet automaton_language(const TransitionSystem& m, size_t from, size_t to);

// Identifies y of s1 with x of s2; cross distances multiply through the
// glue point. x of the result is x of s1, y is y of s2.
EnvelopeSpace glue(const EnvelopeSpace& s1, const EnvelopeSpace& s2);

// Is there a bijection of points fixing x and y and preserving every
// distance value exactly?
bool spaces_isomorphic(const EnvelopeSpace& sa, const EnvelopeSpace& sb);

// For every point s, the pair (s, t) with involute(t) the left residual of
// F by s. Each pair satisfies concat(s, involute(t)) ⊆ F and none is
// dominated componentwise (as languages) by another derived pair.
std::vector<std::pair<UpSet, UpSet>> derive_minimal_pairs(
    const EnvelopeSpace& s);

}  // namespace higman

#endif  // HIGMAN_ENVELOPE_HPP_

#ifndef HIGMAN_FACTORIZATION_HPP_
#define HIGMAN_FACTORIZATION_HPP_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "higman/upset.hpp"

namespace higman {

// An ordered sequence of irreducible segments whose product is the input.
// The empty sequence is the factorization of A*.
struct Factorization {
  std::vector<UpSet> factors;

  bool operator==(const Factorization&) const = default;
};

// All ways to write F as a product of two proper segments, deduplicated.
// The search pivots on a shortest generator z0: in any factorization
// F1 F2 = F the generator antichains multiply bijectively onto gens(F), so
// z0 splits as u0 v0 with u0 a generator of F1 and v0 one of F2, and every
// generator of F1 (resp. F2) occurs as the complementary prefix (suffix) of
// some generator against v0 (u0). Enumerating subsets of those candidates
// and checking the product recovers every factorization.
std::vector<std::pair<UpSet, UpSet>> two_factor_splits(const UpSet& f);

// The empty segment is irreducible; A* is not (it is the neutral element).
bool is_irreducible(const UpSet& f);

// Given the number of available splits, returns the index to recurse on.
using SplitChooser = std::function<size_t(size_t)>;

// The unique sequence of irreducibles multiplying to F. The split choice is
// irrelevant to the result; the default takes the first split found.
Factorization factorize(const UpSet& f);
Factorization factorize(const UpSet& f, const SplitChooser& choose);

// Which of the two outer products carries the shorter prefix: for
// f1_prefix, g1 = f1·w and f2 = w·g2; for g1_prefix, f1 = g1·w and
// g2 = w·f2.
enum class WitnessSide { f1_prefix, g1_prefix };

struct EquidivisibilityWitness {
  WitnessSide side;
  UpSet refinement;
};

// Given two factorizations f1 f2 = g1 g2 of the same nonempty segment,
// produces the interpolating segment w. The candidate is the left residual
// of the longer prefix by the shorter one and is verified by concatenation;
// failure of both sides would contradict unique factorization.
EquidivisibilityWitness equidivisibility_witness(const UpSet& f1,
                                                 const UpSet& f2,
                                                 const UpSet& g1,
                                                 const UpSet& g2);

struct SummabilityOutcome {
  UpSet u1, u2;
  // No other supplied candidate is componentwise larger as a language with
  // its product still inside v1 v2.
  bool minimal = false;
  // w with u2 = w·v2, u1·w ⊆ v1 and v1 ⊆ u1.
  std::optional<UpSet> left_witness;
  // w with u1 = v1·w, w·u2 ⊆ v2 and v2 ⊆ u2.
  std::optional<UpSet> right_witness;

  bool summable() const {
    return minimal && (left_witness.has_value() || right_witness.has_value());
  }
};

// Checks the convexity half of the decomposition property on a supplied
// family of candidate pairs whose products lie inside v1 v2. Witnesses are
// recovered through residuals and verified by direct containment. This is a
// property-test harness, not a decision procedure over the whole monoid.
std::vector<SummabilityOutcome> verify_summable(
    const UpSet& v1, const UpSet& v2,
    const std::vector<std::pair<UpSet, UpSet>>& candidates);

}  // namespace higman

#endif  // HIGMAN_FACTORIZATION_HPP_

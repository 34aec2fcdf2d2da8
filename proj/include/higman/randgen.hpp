#ifndef HIGMAN_RANDGEN_HPP_
#define HIGMAN_RANDGEN_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "higman/upset.hpp"

// Seeded instance generation for the property suites. splitmix64 underneath,
// so identical seeds reproduce identical instances on every platform.
namespace higman::gen {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform in [lo, hi], inclusive.
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  bool one_in(uint64_t n) { return below(n) == 0; }

 private:
  uint64_t state_;
};

// Alphabets live behind shared_ptr here because generated UpSets keep
// pointers into them.
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// 2..max_letters letters, a random partial order (trivial about a third of
// the time) and a random order-preserving involution (identity fallback).
AlphabetPtr random_alphabet(Rng& rng, int max_letters = 4);

Word random_word(Rng& rng, const Alphabet& a, size_t min_len, size_t max_len);

// A nonempty proper segment: 1..max_gens random generators of length
// 1..max_len, minimized. Biased towards small instances so that envelope
// construction stays fast.
UpSet random_upset(Rng& rng, const Alphabet& a, size_t max_gens,
                   size_t max_len);

UpSet random_irreducible(Rng& rng, const Alphabet& a, size_t max_gens,
                         size_t max_len);

// A product of 1..max_factors random irreducibles whose generator count and
// generator lengths stay inside the given caps. Returns the product and its
// factor sequence.
struct ProductInstance {
  UpSet product;
  std::vector<UpSet> factors;
};
ProductInstance random_product(Rng& rng, const Alphabet& a,
                               size_t max_factors, size_t max_gens,
                               size_t max_len);

// A closed segment: the upper cone of a few random words.
UpSet random_closed(Rng& rng, const Alphabet& a, size_t max_words,
                    size_t max_len);

}  // namespace higman::gen

#endif  // HIGMAN_RANDGEN_HPP_

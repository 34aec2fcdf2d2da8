#include "higman/randgen.hpp"

#include <algorithm>
#include <numeric>

#include "higman/factorization.hpp"
#include "higman/macneille.hpp"

namespace higman::gen {

AlphabetPtr random_alphabet(Rng& rng, int max_letters) {
  const int n = static_cast<int>(rng.range(2, static_cast<uint64_t>(max_letters)));
  AlphabetSpec spec;
  for (int i = 0; i < n; ++i) {
    spec.letters.emplace_back(1, static_cast<char>('a' + i));
  }
  if (!rng.one_in(3)) {
    // Random edges pointing up a random permutation keep the order acyclic.
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.one_in(3)) {
          spec.order.emplace_back(spec.letters[static_cast<size_t>(perm[static_cast<size_t>(i)])],
                                  spec.letters[static_cast<size_t>(perm[static_cast<size_t>(j)])]);
        }
      }
    }
  }
  if (rng.one_in(2)) {
    // Try one random non-identity pairing; keep it only when it respects
    // the order.
    AlphabetSpec with_bar = spec;
    int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    if (i != j) {
      with_bar.involution.emplace_back(spec.letters[static_cast<size_t>(i)],
                                       spec.letters[static_cast<size_t>(j)]);
      try {
        return std::make_shared<Alphabet>(Alphabet::validate(with_bar));
      } catch (const ParseError&) {
        // fall through to the identity involution
      }
    }
  }
  return std::make_shared<Alphabet>(Alphabet::validate(spec));
}

Word random_word(Rng& rng, const Alphabet& a, size_t min_len,
                 size_t max_len) {
  const size_t len = rng.range(min_len, max_len);
  std::vector<Letter> ls;
  ls.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    ls.push_back(static_cast<Letter>(rng.below(static_cast<uint64_t>(a.size()))));
  }
  return Word(std::move(ls));
}

UpSet random_upset(Rng& rng, const Alphabet& a, size_t max_gens,
                   size_t max_len) {
  const size_t count = rng.range(1, max_gens);
  // Keep the total generator mass moderate: min of two draws biases the
  // lengths downward without excluding the long ones.
  std::vector<Word> words;
  for (size_t i = 0; i < count; ++i) {
    const size_t len =
        std::min(rng.range(1, max_len), rng.range(1, max_len));
    words.push_back(random_word(rng, a, len, len));
  }
  return UpSet::of(a, std::move(words));
}

UpSet random_irreducible(Rng& rng, const Alphabet& a, size_t max_gens,
                         size_t max_len) {
  for (int tries = 0; tries < 200; ++tries) {
    UpSet f = random_upset(rng, a, max_gens, max_len);
    if (!f.is_all() && is_irreducible(f)) return f;
  }
  // Single letters generate irreducible segments (their graduation is 1).
  return UpSet::principal(
      a, Word::of(static_cast<Letter>(rng.below(static_cast<uint64_t>(a.size())))));
}

ProductInstance random_product(Rng& rng, const Alphabet& a,
                               size_t max_factors, size_t max_gens,
                               size_t max_len) {
  for (int tries = 0; tries < 200; ++tries) {
    const size_t count = rng.range(1, max_factors);
    ProductInstance inst{UpSet::all(a), {}};
    for (size_t i = 0; i < count; ++i) {
      inst.factors.push_back(random_irreducible(rng, a, 2, 2));
      inst.product = concat(inst.product, inst.factors.back());
    }
    if (inst.product.gens().size() <= max_gens &&
        inst.product.gens().back().size() <= max_len) {
      return inst;
    }
  }
  // Fall back to a single small irreducible.
  ProductInstance inst{UpSet::all(a), {}};
  inst.factors.push_back(random_irreducible(rng, a, 2, 2));
  inst.product = inst.factors.back();
  return inst;
}

UpSet random_closed(Rng& rng, const Alphabet& a, size_t max_words,
                    size_t max_len) {
  const size_t count = rng.range(1, max_words);
  std::vector<Word> words;
  for (size_t i = 0; i < count; ++i) {
    words.push_back(random_word(rng, a, 1, max_len));
  }
  return upper_cone(a, words);
}

}  // namespace higman::gen

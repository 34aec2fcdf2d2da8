#include <doctest.h>

#include "helpers.hpp"
#include "higman/macneille.hpp"
#include "higman/oracle.hpp"

using namespace higman;
using test::U;
using test::W;
using test::words_of;

TEST_CASE("lower cones of generated segments") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(lower_cone(U(a, {"ab", "ba"})).maxgens == words_of(a, {"a", "b"}));
  CHECK(lower_cone(UpSet::all(a)).maxgens == std::vector<Word>{Word()});
  CHECK(lower_cone(U(a, {"ab"})).maxgens == words_of(a, {"ab"}));
  CHECK(lower_cone(U(a, {"aa", "bb"})).maxgens == std::vector<Word>{Word()});
  CHECK_THROWS_AS(lower_cone(UpSet::empty(a)), DomainError);
}

TEST_CASE("lowered subwords honour the letter order") {
  const Alphabet chain = Alphabet::make("ab", {"ab"});
  auto subs = lowered_subwords(chain, W(chain, "b"));
  CHECK(subs == words_of(chain, {"", "a", "b"}));
}

TEST_CASE("upper cones intersect principal segments") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(upper_cone(a, words_of(a, {"a", "b"})) == U(a, {"ab", "ba"}));
  CHECK(upper_cone(a, {Word()}).is_all());
  CHECK(upper_cone(a, {}).is_all());
  // Against the oracle: common upper bounds of a and b at depth 5.
  std::vector<Word> brute;
  for (const Word& w : oracle::all_words(a, 5)) {
    if (oracle::embeds_exhaustive(a, W(a, "a"), w) &&
        oracle::embeds_exhaustive(a, W(a, "b"), w)) {
      brute.push_back(w);
    }
  }
  CHECK(oracle::same_words(
      oracle::truncate(upper_cone(a, words_of(a, {"a", "b"})), 5).words,
      brute));
}

TEST_CASE("closure grows, fixes the boundary values, detects closedness") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(closure(U(a, {"ab", "ba"})) == U(a, {"ab", "ba"}));
  CHECK(closure(U(a, {"aa", "bb"})).is_all());
  CHECK(closure(UpSet::empty(a)).is_empty());
  CHECK(closure(UpSet::all(a)).is_all());

  CHECK(is_closed(U(a, {"ab"})));
  CHECK_FALSE(is_closed(U(a, {"aa", "bb"})));
  CHECK(is_closed(UpSet::all(a)));
  CHECK(is_closed(UpSet::empty(a)));
}

TEST_CASE("closed unions") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(closed_union(a, {U(a, {"aa"}), U(a, {"bb"})}).is_all());
  CHECK(closed_union(a, {U(a, {"aa", "bb"})}).is_all());
  CHECK(closed_union(a, {U(a, {"ab"}), U(a, {"ab", "ba"})}) ==
        U(a, {"ab", "ba"}));
  CHECK(closed_union(a, {}).is_empty());
}

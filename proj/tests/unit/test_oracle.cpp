#include <doctest.h>

#include "helpers.hpp"
#include "higman/oracle.hpp"

using namespace higman;
using test::U;
using test::W;
using test::words_of;

TEST_CASE("truncation lists exactly the bounded members") {
  const Alphabet a = Alphabet::make("ab");
  auto t = oracle::truncate(U(a, {"ab"}), 3);
  CHECK(t.words == words_of(a, {"ab", "aab", "aba", "abb", "bab"}));
  CHECK(oracle::truncate(UpSet::all(a), 1).words == words_of(a, {"", "a", "b"}));
  CHECK(oracle::truncate(UpSet::empty(a), 4).words.empty());
}

TEST_CASE("enumeration refuses to explode") {
  const Alphabet a = Alphabet::make("abcd");
  CHECK_THROWS_AS(oracle::all_words(a, 15), DomainError);
  CHECK(oracle::all_words(a, 2).size() == 1 + 4 + 16);
}

TEST_CASE("minimal elements of a raw product") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(oracle::concat_min(a, words_of(a, {"a"}), words_of(a, {"b"})) ==
        words_of(a, {"ab"}));
  CHECK(oracle::concat_min(a, words_of(a, {"a", "b"}), words_of(a, {"a", "b"})) ==
        words_of(a, {"aa", "ab", "ba", "bb"}));
  // The empty word is neutral.
  CHECK(oracle::concat_min(a, words_of(a, {"ab", "aab", "ba"}), {Word()}) ==
        words_of(a, {"ab", "ba"}));
}

TEST_CASE("explicit residuals") {
  const Alphabet a = Alphabet::make("ab");
  auto t4 = oracle::truncate(U(a, {"ab"}), 4);
  CHECK(oracle::residual_words(t4, W(a, "b"), Side::right) ==
        oracle::truncate(U(a, {"a"}), 3).words);
  CHECK(oracle::residual_words(t4, Word(), Side::right) == t4.words);
  auto none = oracle::truncate(UpSet::empty(a), 3);
  CHECK(oracle::residual_words(none, W(a, "a"), Side::left).empty());
  CHECK_THROWS_AS(oracle::residual_words(t4, W(a, "aabab"), Side::right),
                  DomainError);
}

TEST_CASE("exhaustive embedding handles the letter order") {
  const Alphabet chain = Alphabet::make("ab", {"ab"});
  CHECK(oracle::embeds_exhaustive(chain, W(chain, "aa"), W(chain, "bb")));
  CHECK_FALSE(oracle::embeds_exhaustive(chain, W(chain, "b"), W(chain, "aaa")));
}

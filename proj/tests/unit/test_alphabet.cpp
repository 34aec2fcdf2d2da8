#include <doctest.h>

#include "helpers.hpp"
#include "higman/alphabet.hpp"
#include "higman/oracle.hpp"

using namespace higman;
using test::W;

TEST_CASE("alphabet validation accepts the usual shapes") {
  const Alphabet discrete = Alphabet::make("ab");
  CHECK(discrete.size() == 2);
  CHECK(discrete.leq(0, 0));
  CHECK_FALSE(discrete.leq(0, 1));
  CHECK(discrete.bar_is_identity());

  const Alphabet pm = Alphabet::make("+-", {}, {"+-"});
  CHECK(pm.bar(*pm.find("+")) == *pm.find("-"));
  CHECK(pm.bar(*pm.find("-")) == *pm.find("+"));

  const Alphabet chain = Alphabet::make("abc", {"ab", "bc"});
  CHECK(chain.leq(*chain.find("a"), *chain.find("c")));  // transitive closure
  CHECK_FALSE(chain.leq(*chain.find("c"), *chain.find("a")));
}

TEST_CASE("alphabet validation rejects broken specs") {
  CHECK_THROWS_AS(Alphabet::make("ab", {"ab", "ba"}), ParseError);  // cycle
  CHECK_THROWS_AS(Alphabet::make(""), ParseError);
  CHECK_THROWS_AS(Alphabet::make("aa"), ParseError);  // duplicate name
  // One letter paired twice cannot be a bijection.
  CHECK_THROWS_AS(Alphabet::make("abc", {}, {"ab", "ac"}), ParseError);
  // a <= b must be preserved by the involution.
  CHECK_THROWS_AS(Alphabet::make("abcd", {"ab"}, {"ac", "bd"}), ParseError);
  CHECK_NOTHROW(Alphabet::make("abcd", {"ab", "cd"}, {"ac", "bd"}));
}

TEST_CASE("minimal upper bounds of letters") {
  const Alphabet a = Alphabet::make("abc", {"ac", "bc"});
  const auto& mub = a.min_upper_bounds(*a.find("a"), *a.find("b"));
  REQUIRE(mub.size() == 1);
  CHECK(mub[0] == *a.find("c"));
  const Alphabet t = Alphabet::make("ab");
  CHECK(t.min_upper_bounds(0, 1).empty());
  CHECK(t.min_upper_bounds(0, 0) == std::vector<Letter>{0});
}

TEST_CASE("subword order: greedy matching is exact") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(higman_leq(a, Word(), W(a, "babab")));
  CHECK(higman_leq(a, W(a, "ab"), W(a, "aabb")));
  CHECK_FALSE(higman_leq(a, W(a, "ab"), W(a, "ba")));

  const Alphabet chain = Alphabet::make("ab", {"ab"});
  CHECK(higman_leq(chain, W(chain, "aa"), W(chain, "bb")));
  CHECK_FALSE(higman_leq(chain, W(chain, "bb"), W(chain, "aa")));

  for (const Alphabet& al : {a, chain}) {
    for (const Word& u : oracle::all_words(al, 4)) {
      for (const Word& v : oracle::all_words(al, 4)) {
        CHECK(higman_leq(al, u, v) == oracle::embeds_exhaustive(al, u, v));
      }
    }
  }
}

TEST_CASE("word involution reverses and bars") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(involute(a, W(a, "ab")) == W(a, "ba"));
  CHECK(involute(a, Word()) == Word());

  const Alphabet pm = Alphabet::make("+-", {}, {"+-"});
  CHECK(involute(pm, W(pm, "++-")) == W(pm, "+--"));
  CHECK(involute(pm, involute(pm, W(pm, "+-+-"))) == W(pm, "+-+-"));
}

TEST_CASE("shortlex is the canonical word order") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(shortlex_less(Word(), W(a, "a")));
  CHECK(shortlex_less(W(a, "b"), W(a, "aa")));
  CHECK(shortlex_less(W(a, "ab"), W(a, "ba")));
  CHECK_FALSE(shortlex_less(W(a, "ba"), W(a, "ab")));
}

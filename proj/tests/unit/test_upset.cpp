#include <doctest.h>

#include "helpers.hpp"
#include "higman/oracle.hpp"
#include "higman/upset.hpp"

using namespace higman;
using test::U;
using test::W;
using test::words_of;

namespace {

// Truncation-level equality against the brute-force side.
bool same_language(const UpSet& f, const UpSet& g, size_t depth = 6) {
  return oracle::same_words(oracle::truncate(f, depth).words,
                            oracle::truncate(g, depth).words);
}

}  // namespace

TEST_CASE("minimize keeps exactly the minimal generators") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(U(a, {"a", "ab", "b"}) == U(a, {"a", "b"}));
  CHECK(UpSet::of(a, {}).is_empty());
  const Alphabet chain = Alphabet::make("ab", {"ab"});
  CHECK(U(chain, {"a", "b"}) == U(chain, {"a"}));
  // The up-closure is unchanged by minimization, per the oracle.
  CHECK(oracle::same_words(
      oracle::truncate(U(a, {"a", "ab", "b"}), 5).words,
      oracle::upclose(a, words_of(a, {"a", "ab", "b"}), 5)));
}

TEST_CASE("membership goes through some generator") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(member(U(a, {"ab"}), W(a, "aab")));
  CHECK_FALSE(member(U(a, {"ab"}), W(a, "ba")));
  CHECK(member(UpSet::all(a), Word()));
  CHECK_FALSE(member(UpSet::empty(a), Word()));
}

TEST_CASE("containment is reverse of the monoid order") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(contains(U(a, {"a"}), U(a, {"ab"})));
  CHECK_FALSE(contains(U(a, {"ab"}), U(a, {"a"})));
  CHECK(contains(U(a, {"ab"}), UpSet::empty(a)));
  CHECK(contains(UpSet::all(a), U(a, {"ab"})));
}

TEST_CASE("concatenation multiplies generator antichains") {
  const Alphabet a = Alphabet::make("ab");
  const UpSet f = U(a, {"ab"});
  CHECK(concat(U(a, {"a"}), U(a, {"b"})) == f);
  CHECK(same_language(concat(U(a, {"a"}), U(a, {"b"})), f));
  CHECK(concat(f, UpSet::all(a)) == f);
  CHECK(concat(UpSet::all(a), f) == f);
  CHECK(concat(UpSet::empty(a), f).is_empty());
  CHECK(concat(U(a, {"a", "b"}), U(a, {"a", "b"})).gens().size() == 4);
}

TEST_CASE("union is the lattice meet") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(union_meet(U(a, {"aa"}), U(a, {"bb"})) == U(a, {"aa", "bb"}));
  const UpSet f = U(a, {"ab", "ba"});
  CHECK(union_meet(f, f) == f);
  CHECK(union_meet(f, UpSet::empty(a)) == f);
}

TEST_CASE("minimal common upper bounds of words") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(min_upper_bounds(a, W(a, "a"), W(a, "b")) == words_of(a, {"ab", "ba"}));
  CHECK(min_upper_bounds(a, W(a, "ab"), Word()) == words_of(a, {"ab"}));
  const Alphabet chain = Alphabet::make("ab", {"ab"});
  CHECK(min_upper_bounds(chain, W(chain, "a"), W(chain, "b")) ==
        words_of(chain, {"b"}));
  // Cross-check against exhaustive search below the length bound.
  const Word u = W(a, "aba");
  const Word v = W(a, "bab");
  std::vector<Word> brute;
  for (const Word& w : oracle::all_words(a, u.size() + v.size())) {
    if (oracle::embeds_exhaustive(a, u, w) &&
        oracle::embeds_exhaustive(a, v, w)) {
      brute.push_back(w);
    }
  }
  CHECK(min_upper_bounds(a, u, v) == oracle::minimal_exhaustive(a, brute));
}

TEST_CASE("intersection meets the languages") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(intersect(U(a, {"a"}), U(a, {"b"})) == U(a, {"ab", "ba"}));
  CHECK(same_language(intersect(U(a, {"a"}), U(a, {"b"})), U(a, {"ab", "ba"})));
  const UpSet f = U(a, {"ab", "ba"});
  CHECK(intersect(f, UpSet::all(a)) == f);
  CHECK(intersect(U(a, {"ab"}), U(a, {"b"})) == U(a, {"ab"}));
  CHECK(intersect(f, UpSet::empty(a)).is_empty());
}

TEST_CASE("word quotients peel letters") {
  const Alphabet a = Alphabet::make("ab");
  const UpSet f = U(a, {"ab"});
  CHECK(quotient(f, W(a, "b"), Side::right) == U(a, {"a"}));
  CHECK(quotient(f, W(a, "a"), Side::right) == f);
  CHECK(quotient(f, Word(), Side::right) == f);
  CHECK(quotient(f, Word(), Side::left) == f);
  CHECK(quotient(f, W(a, "a"), Side::left) == U(a, {"b"}));
  CHECK(quotient(UpSet::all(a), W(a, "ab"), Side::right).is_all());
  CHECK(quotient(UpSet::empty(a), W(a, "a"), Side::left).is_empty());
}

TEST_CASE("residuals are the largest compatible language") {
  const Alphabet a = Alphabet::make("ab");
  const UpSet f = U(a, {"ab"});
  CHECK(residual(f, UpSet::empty(a), Side::right).is_all());
  CHECK(residual(f, U(a, {"b"}), Side::right) == U(a, {"a"}));
  CHECK(residual(f, f, Side::left).is_all());
  // r·B lands inside F and nothing bigger does, at oracle depth.
  const UpSet b = U(a, {"b"});
  const UpSet r = residual(f, b, Side::right);
  CHECK(contains(f, concat(r, b)));
  for (const Word& u : oracle::all_words(a, 4)) {
    if (!member(r, u)) CHECK_FALSE(member(f, u + W(a, "b")));
  }
}

TEST_CASE("graduation is the minimal generator length") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(graduation(U(a, {"aa", "b"})) == 1);
  CHECK(graduation(UpSet::all(a)) == 0);
  CHECK_THROWS_AS(graduation(UpSet::empty(a)), DomainError);
  CHECK(graduation(concat(U(a, {"ab"}), U(a, {"b"}))) == 3);
}

TEST_CASE("segment involution") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(involute(U(a, {"ab"})) == U(a, {"ba"}));
  CHECK(involute(U(a, {"a", "b"})) == U(a, {"a", "b"}));
  CHECK(involute(involute(U(a, {"ab", "bba"}))) == U(a, {"ab", "bba"}));
  CHECK(involute(concat(U(a, {"ab"}), U(a, {"b"}))) ==
        concat(involute(U(a, {"b"})), involute(U(a, {"ab"}))));
}

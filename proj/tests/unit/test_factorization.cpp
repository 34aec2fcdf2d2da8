#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "higman/factorization.hpp"

using namespace higman;
using test::U;
using test::W;

TEST_CASE("two-factor splits of small segments") {
  const Alphabet a = Alphabet::make("ab");
  auto splits = two_factor_splits(U(a, {"ab"}));
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].first == U(a, {"a"}));
  CHECK(splits[0].second == U(a, {"b"}));

  CHECK(two_factor_splits(U(a, {"a", "b"})).empty());

  auto square = two_factor_splits(U(a, {"aa", "ab", "ba", "bb"}));
  const auto letters = U(a, {"a", "b"});
  CHECK(std::any_of(square.begin(), square.end(), [&](const auto& p) {
    return p.first == letters && p.second == letters;
  }));

  CHECK_THROWS_AS(two_factor_splits(UpSet::empty(a)), DomainError);
  CHECK_THROWS_AS(two_factor_splits(UpSet::all(a)), DomainError);
}

TEST_CASE("irreducibility decisions") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(is_irreducible(U(a, {"aa", "bb"})));
  CHECK(is_irreducible(U(a, {"a", "b"})));
  CHECK_FALSE(is_irreducible(U(a, {"ab"})));
  CHECK(is_irreducible(UpSet::empty(a)));
  CHECK_FALSE(is_irreducible(UpSet::all(a)));
}

TEST_CASE("unique factorization of worked segments") {
  const Alphabet a = Alphabet::make("ab");
  const Factorization f1 = factorize(U(a, {"ab"}));
  CHECK(f1.factors == std::vector<UpSet>{U(a, {"a"}), U(a, {"b"})});

  const Factorization f2 = factorize(U(a, {"aa", "bb"}));
  CHECK(f2.factors == std::vector<UpSet>{U(a, {"aa", "bb"})});

  CHECK(factorize(UpSet::all(a)).factors.empty());
  CHECK_THROWS_AS(factorize(UpSet::empty(a)), DomainError);

  // Longer ladder: every recursion order gives the same sequence.
  const UpSet ladder = U(a, {"abb"});
  const auto expected = std::vector<UpSet>{U(a, {"a"}), U(a, {"b"}), U(a, {"b"})};
  CHECK(factorize(ladder).factors == expected);
  CHECK(factorize(ladder, [](size_t n) { return n - 1; }).factors == expected);
}

TEST_CASE("equidivisibility witnesses") {
  const Alphabet a = Alphabet::make("ab");
  // ↑a·↑bb = ↑ab·↑b, refined through W = ↑b.
  auto w = equidivisibility_witness(U(a, {"a"}), U(a, {"bb"}), U(a, {"ab"}),
                                    U(a, {"b"}));
  CHECK(w.side == WitnessSide::f1_prefix);
  CHECK(w.refinement == U(a, {"b"}));
  CHECK(concat(U(a, {"a"}), w.refinement) == U(a, {"ab"}));
  CHECK(concat(w.refinement, U(a, {"b"})) == U(a, {"bb"}));

  auto self = equidivisibility_witness(U(a, {"a"}), U(a, {"b"}), U(a, {"a"}),
                                       U(a, {"b"}));
  CHECK(self.refinement.is_all());

  CHECK_THROWS_AS(equidivisibility_witness(U(a, {"a"}), U(a, {"a"}),
                                           U(a, {"b"}), U(a, {"b"})),
                  DomainError);
  CHECK_THROWS_AS(equidivisibility_witness(UpSet::empty(a), U(a, {"a"}),
                                           UpSet::empty(a), U(a, {"a"})),
                  DomainError);
}

TEST_CASE("summability outcomes on supplied candidates") {
  const Alphabet al = Alphabet::make("ab");
  const UpSet v1 = U(al, {"a"});
  const UpSet v2 = U(al, {"b"});

  SUBCASE("the pair itself interpolates through the neutral element") {
    auto outcomes = verify_summable(v1, v2, {{v1, v2}});
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].minimal);
    REQUIRE(outcomes[0].left_witness.has_value());
    CHECK(outcomes[0].left_witness->is_all());
    REQUIRE(outcomes[0].right_witness.has_value());
    CHECK(outcomes[0].right_witness->is_all());
  }

  SUBCASE("a coarse regrouping still interpolates") {
    const UpSet v = concat(v1, v2);
    auto outcomes =
        verify_summable(v1, v2, {{v1, v2}, {v, UpSet::all(al)}});
    REQUIRE(outcomes.size() == 2);
    // Neither candidate dominates the other componentwise.
    CHECK(outcomes[0].minimal);
    CHECK(outcomes[1].minimal);
    CHECK(outcomes[1].summable());
    REQUIRE(outcomes[1].right_witness.has_value());
    CHECK(*outcomes[1].right_witness == v2);
  }

  SUBCASE("refined split against a coarser target") {
    auto outcomes = verify_summable(U(al, {"ab"}), U(al, {"b"}),
                                    {{U(al, {"a"}), U(al, {"bb"})}});
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].minimal);
    REQUIRE(outcomes[0].left_witness.has_value());
    CHECK(*outcomes[0].left_witness == U(al, {"b"}));
    CHECK(outcomes[0].summable());
  }

  SUBCASE("candidates escaping the product are rejected") {
    CHECK_THROWS_AS(
        verify_summable(v1, v2, {{UpSet::all(al), UpSet::all(al)}}),
        DomainError);
  }
}
